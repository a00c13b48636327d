#pragma once

#include "manin/lie.hpp"
#include "manin/report.hpp"
#include "manin/subspace.hpp"

namespace manin {

/// 2-vector space: a linear map del: C -> K, viewed as the action VB-
/// groupoid Gamma = C + K over K with s(c,k) = k, t(c,k) = k + del(c),
/// m((c, k + del c'), (c', k)) = (c + c', k). Total coordinates are stored
/// core-first: (c, k).
struct TwoVect {
    std::size_t side_dim = 0;
    std::size_t core_dim = 0;
    Matrix del;  // side_dim x core_dim

    TwoVect() = default;
    TwoVect(std::size_t side, std::size_t core, Matrix d)
        : side_dim(side), core_dim(core), del(std::move(d)) {
        if (del.rows() != side_dim || del.cols() != core_dim)
            throw std::invalid_argument("structural map shape mismatch");
    }
    static TwoVect zero(std::size_t side, std::size_t core) {
        return TwoVect(side, core, Matrix::zero(side, core));
    }

    std::size_t total_dim() const { return side_dim + core_dim; }

    bool operator==(const TwoVect& o) const {
        return side_dim == o.side_dim && core_dim == o.core_dim && del == o.del;
    }
    bool operator!=(const TwoVect& o) const { return !(*this == o); }
};

struct GroupoidMaps {
    LinearMap s, t, unit;
};

inline GroupoidMaps groupoid_maps(const TwoVect& v) {
    Matrix s(v.side_dim, v.total_dim());
    Matrix t(v.side_dim, v.total_dim());
    Matrix u(v.total_dim(), v.side_dim);
    s.paste(0, v.core_dim, Matrix::identity(v.side_dim));
    t.paste(0, 0, v.del);
    t.paste(0, v.core_dim, Matrix::identity(v.side_dim));
    u.paste(v.core_dim, 0, Matrix::identity(v.side_dim));
    return {{s}, {t}, {u}};
}

struct GroupoidGraph {
    std::size_t block_dim = 0;  // dimension of one factor of the ambient cube
    Subspace graph;
};

/// Multiplication graph in Gamma^3, triples ordered (product, first factor,
/// second factor), parametrized by (c, c', k).
inline GroupoidGraph graph_mult(const TwoVect& v) {
    std::size_t d = v.total_dim(), nc = v.core_dim, ns = v.side_dim;
    Matrix gens(2 * nc + ns, 3 * d);
    for (std::size_t a = 0; a < nc; ++a) {
        gens.at(a, a) = 1;                // product core: c
        gens.at(a, d + a) = 1;            // first core: c
        gens.at(nc + a, a) = 1;           // product core: c'
        gens.at(nc + a, 2 * d + a) = 1;   // second core: c'
        for (std::size_t b = 0; b < ns; ++b)
            gens.at(nc + a, d + nc + b) = v.del.at(b, a);  // first side: del c'
    }
    for (std::size_t b = 0; b < ns; ++b) {
        gens.at(2 * nc + b, nc + b) = 1;          // product side: k
        gens.at(2 * nc + b, d + nc + b) = 1;      // first side: k
        gens.at(2 * nc + b, 2 * d + nc + b) = 1;  // second side: k
    }
    return {d, Subspace::span(gens)};
}

/// Dual 2-vector space in standard form: side C*, core K*, structural map
/// the plain transpose.
inline TwoVect dualize(const TwoVect& v) {
    return TwoVect(v.core_dim, v.side_dim, v.del.transpose());
}

/// Identification of the standard-form dual coordinates (a in K*, chi in
/// C*) with the literal dual coordinates (mu_C, mu_K) of Gamma*: the core
/// element a sits over the unit at del^T a and the side lift is the unit
/// covector (chi, 0).
inline Matrix dual_identification(const TwoVect& v) {
    std::size_t nc = v.core_dim, ns = v.side_dim;
    Matrix j(nc + ns, nc + ns);
    j.paste(0, 0, v.del.transpose());              // mu_C += del^T a
    j.paste(0, ns, Matrix::identity(nc));          // mu_C += chi
    j.paste(nc, 0, Matrix::identity(ns));          // mu_K = a
    return j;
}

/// Multiplication graph of the dual groupoid, written directly in the
/// literal dual coordinates (mu_C, mu_K) of Gamma*:
///   s*(mu) = mu_C - del^T mu_K, t*(mu) = mu_C, m*(mu,nu) = (mu_C, mu_K+nu_K).
inline GroupoidGraph dual_graph_mult(const TwoVect& v) {
    std::size_t d = v.total_dim(), nc = v.core_dim, ns = v.side_dim;
    // Parameters: mu_K (side), nu_C (core), nu_K (side); mu_C = nu_C + del^T mu_K.
    Matrix gens(2 * ns + nc, 3 * d);
    for (std::size_t b = 0; b < ns; ++b) {          // mu_K direction
        for (std::size_t a = 0; a < nc; ++a) {
            gens.at(b, a) = v.del.at(b, a);          // product mu_C: del^T mu_K
            gens.at(b, d + a) = v.del.at(b, a);      // first mu_C
        }
        gens.at(b, nc + b) = 1;      // product mu_K
        gens.at(b, d + nc + b) = 1;  // first mu_K
    }
    for (std::size_t a = 0; a < nc; ++a) {          // nu_C direction
        gens.at(ns + a, a) = 1;
        gens.at(ns + a, d + a) = 1;
        gens.at(ns + a, 2 * d + a) = 1;
    }
    for (std::size_t b = 0; b < ns; ++b) {          // nu_K direction
        gens.at(ns + nc + b, nc + b) = 1;
        gens.at(ns + nc + b, 2 * d + nc + b) = 1;
    }
    return {d, Subspace::span(gens)};
}

/// (alpha, beta, gamma) -> (alpha, -beta, -gamma) on a triple of d-blocks.
inline Matrix phi_map(std::size_t d) {
    Matrix m(3 * d, 3 * d);
    m.paste(0, 0, Matrix::identity(d));
    m.paste(d, d, -Matrix::identity(d));
    m.paste(2 * d, 2 * d, -Matrix::identity(d));
    return m;
}

/// (u + alpha, v + beta, w + gamma) -> (u, v, w) + (alpha, -beta, -gamma),
/// from ((Gamma + Gamma*)^3 to Gamma^3 + (Gamma*)^3, all blocks of size d.
inline Matrix Phi_map(std::size_t d) {
    Matrix m(6 * d, 6 * d);
    for (std::size_t f = 0; f < 3; ++f) {
        Matrix sign = (f == 0 ? Matrix::identity(d) : -Matrix::identity(d));
        m.paste(f * d, 2 * f * d, Matrix::identity(d));   // u,v,w
        m.paste((3 + f) * d, (2 * f + 1) * d, sign);      // alpha,-beta,-gamma
    }
    return m;
}

/// Duality of multiplication graphs: the sign-flipped dual graph is the
/// annihilator of the graph of m.
inline Report check_phi_identity(const TwoVect& v) {
    Report rep;
    rep.subject = "graph_duality";
    Subspace lhs = dual_graph_mult(v).graph.image_under(phi_map(v.total_dim()));
    Subspace rhs = graph_mult(v).graph.annihilator();
    rep.add("phi_of_dual_graph_is_annihilator", lhs == rhs);
    return rep;
}

/// Multiplication graph of the direct-sum groupoid Gamma + Gamma*,
/// coordinates (Gamma block, Gamma* block) per factor.
inline Subspace graph_mult_sum_with_dual(const TwoVect& v) {
    std::size_t d = v.total_dim();
    Subspace g = graph_mult(v).graph;
    Subspace gd = dual_graph_mult(v).graph;
    // Interleave Gamma^3 x (Gamma*)^3 into ((Gamma + Gamma*))^3.
    Matrix perm(6 * d, 6 * d);
    for (std::size_t f = 0; f < 3; ++f) {
        perm.paste(2 * f * d, f * d, Matrix::identity(d));
        perm.paste((2 * f + 1) * d, (3 + f) * d, Matrix::identity(d));
    }
    return direct_sum(g, gd).image_under(perm);
}

inline Report check_Phi_identity(const TwoVect& v) {
    Report rep;
    rep.subject = "graph_duality_total";
    std::size_t d = v.total_dim();
    Subspace lhs = graph_mult_sum_with_dual(v).image_under(Phi_map(d));
    Subspace g = graph_mult(v).graph;
    Subspace rhs = direct_sum(g, g.annihilator());
    rep.add("Phi_of_total_graph_splits", lhs == rhs);
    rep.add("dimension", lhs.dim() == 3 * d, "dim " + std::to_string(lhs.dim()));
    return rep;
}

inline TwoVect direct_sum_twovect(const TwoVect& v1, const TwoVect& v2) {
    return TwoVect(v1.side_dim + v2.side_dim, v1.core_dim + v2.core_dim,
                   direct_sum(v1.del, v2.del));
}

}  // namespace manin
