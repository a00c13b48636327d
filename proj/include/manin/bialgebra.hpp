#pragma once

#include "manin/multivector.hpp"
#include "manin/quadratic.hpp"

namespace manin {

/// Dual pair of Lie algebras on V and V*. gstar's structure constants are
/// read on the dual basis: [e^i, e^j]_* = sum_k f_{ij}^k e^k.
struct LieBialgebra {
    LieAlgebra g;
    LieAlgebra gstar;
};

/// Cobracket delta: g -> wedge^2 g induced by the gstar constants.
inline Multivector cobracket(const LieBialgebra& b, std::size_t i) {
    std::size_t n = b.g.dim();
    Multivector d(n, 2);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) d.add_term({j, k}, b.gstar.constant(j, k, i));
    return d;
}

/// Compatibility of the pair: the cobracket is a 1-cocycle of g with values
/// in wedge^2 g, equivalently the dual differential is a derivation of the
/// gstar bracket. Checked on all basis pairs.
inline Report check_cocycle(const LieBialgebra& b) {
    Report rep;
    rep.subject = "bialgebra";
    if (b.g.dim() != b.gstar.dim()) throw std::invalid_argument("bialgebra dimension mismatch");
    std::size_t n = b.g.dim();
    bool ok = true;
    std::string w;
    for (std::size_t a = 0; a < n && ok; ++a)
        for (std::size_t bb = 0; bb < n; ++bb) {
            Vec br = b.g.bracket_basis(a, bb);
            Multivector lhs(n, 2);
            for (std::size_t k = 0; k < n; ++k)
                if (br[k] != 0) lhs = lhs + cobracket(b, k) * br[k];
            Multivector rhs =
                schouten(b.g, Multivector::basis_element(n, a), cobracket(b, bb)) -
                schouten(b.g, Multivector::basis_element(n, bb), cobracket(b, a));
            Multivector diff = lhs - rhs;
            if (!diff.is_zero()) {
                ok = false;
                auto key = diff.terms().begin()->first;
                w = index_witness({a, bb, key[0], key[1]}) + " residual " +
                    to_string(diff.terms().begin()->second);
                break;
            }
        }
    rep.add("cocycle", ok, w);
    return rep;
}

inline bool is_valid_bialgebra(const LieBialgebra& b) {
    return check_jacobi(b.g).passed() && check_jacobi(b.gstar).passed() &&
           check_cocycle(b).passed();
}

struct DrinfeldDouble {
    QuadraticLieAlgebra total;
    Subspace l1;  // the g block
    Subspace l2;  // the g* block
};

inline ManinTriple as_manin_triple(const DrinfeldDouble& d) { return {d.total, d.l1, d.l2}; }

/// Classical double bracket on g + g*:
///   [X+xi, Y+eta] = [X,Y] + ad*_xi Y - ad*_eta X
///                 + [xi,eta]_* + ad*_X eta - ad*_Y xi
/// with the half-sum duality pairing. The construction is self-validating:
/// the Courant and Manin-triple suites run before the value is returned.
inline DrinfeldDouble drinfeld_double(const LieBialgebra& b) {
    if (!is_valid_bialgebra(b)) throw std::invalid_argument("invalid bialgebra");
    std::size_t n = b.g.dim();
    std::vector<std::string> names = b.g.basis_names();
    for (const auto& s : b.g.basis_names()) names.push_back(s + "*");
    LieAlgebra total(2 * n, names);
    Representation coad_g = coadjoint(b.g);
    Representation coad_gs = coadjoint(b.gstar);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                total.set_constant(i, j, k, b.g.constant(i, j, k));
                total.set_constant(n + i, n + j, n + k, b.gstar.constant(i, j, k));
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // [e_i, e^j] = -ad*_{e^j} e_i + ad*_{e_i} e^j
            Vec gpart = vec_scale(-1, coad_gs.apply(j, basis_vec(n, i)));
            Vec spart = coad_g.apply(i, basis_vec(n, j));
            for (std::size_t k = 0; k < n; ++k) {
                total.set_constant(i, n + j, k, gpart[k]);
                total.set_constant(n + j, i, k, -gpart[k]);
                total.set_constant(i, n + j, n + k, spart[k]);
                total.set_constant(n + j, i, n + k, -spart[k]);
            }
        }
    Matrix form(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        form.at(i, n + i) = Rational(1, 2);
        form.at(n + i, i) = Rational(1, 2);
    }
    DrinfeldDouble d{{total, BilinearForm{form}},
                     Subspace::span(
                         [&] {
                             Matrix m(n, 2 * n);
                             m.paste(0, 0, Matrix::identity(n));
                             return m;
                         }()),
                     Subspace::span([&] {
                         Matrix m(n, 2 * n);
                         m.paste(0, n, Matrix::identity(n));
                         return m;
                     }())};
    if (!check_manin_triple(as_manin_triple(d)).passed())
        throw std::runtime_error("double construction failed its verification suite");
    return d;
}

/// Inverse of the double: reads the bialgebra off a Manin triple,
/// identifying l2 with l1* through twice the pairing so the composite with
/// the half-sum normalization is canonical evaluation.
inline LieBialgebra extract_bialgebra(const ManinTriple& t) {
    if (!check_manin_triple(t).passed())
        throw std::invalid_argument("extract_bialgebra requires a valid Manin triple");
    std::size_t n = t.l1.dim();
    Matrix b1 = t.l1.basis();
    Matrix b2 = t.l2.basis();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p.at(i, j) = t.total.form.pair(b2.row(i), b1.row(j)) * 2;
    auto pinv = p.inverse();
    if (!pinv) throw std::runtime_error("pairing between the two Dirac factors is degenerate");
    Matrix q = *pinv * b2;
    LieAlgebra g(n), gstar(n);
    Matrix b1t = b1.transpose(), qt = q.transpose();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto cg = b1t.solve(t.total.algebra.bracket(b1.row(i), b1.row(j)));
            auto cs = qt.solve(t.total.algebra.bracket(q.row(i), q.row(j)));
            if (!cg || !cs) throw std::runtime_error("Dirac factor not closed under the bracket");
            for (std::size_t k = 0; k < n; ++k) {
                g.set_constant(i, j, k, (*cg)[k]);
                gstar.set_constant(i, j, k, (*cs)[k]);
            }
        }
    return {g, gstar};
}

/// Both directions of the subalgebra / Dirac correspondence for a subspace
/// B of g inside the double: B and ann(B) are subalgebras on their sides
/// exactly when B + ann(B) is Dirac. Evaluated independently and compared.
inline Report check_subalgebra_dirac(const LieBialgebra& bialg, const Subspace& b) {
    Report rep;
    rep.subject = "subalgebra_dirac_correspondence";
    if (b.ambient_dim() != bialg.g.dim()) throw std::invalid_argument("ambient dimension mismatch");
    bool side1 = is_subalgebra(b, bialg.g) && is_subalgebra(b.annihilator(), bialg.gstar);
    DrinfeldDouble d = drinfeld_double(bialg);
    Subspace l = direct_sum(b, b.annihilator());
    bool side2 = is_dirac_point(l, d.total);
    rep.add("equivalence", side1 == side2,
            std::string("subalgebra side ") + (side1 ? "true" : "false") + ", Dirac side " +
                (side2 ? "true" : "false"));
    return rep;
}

/// Generalized Yang-Baxter condition: [lam, lam] is invariant, i.e. its
/// Schouten bracket with every basis element vanishes.
inline Report check_rmatrix(const LieAlgebra& g, const Multivector& lam) {
    if (lam.degree() != 2) throw std::invalid_argument("r-matrix must be a bivector");
    if (lam.dim() != g.dim()) throw std::invalid_argument("r-matrix algebra mismatch");
    Report rep;
    rep.subject = "rmatrix";
    Multivector s = schouten(g, lam, lam);
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (!schouten(g, s, Multivector::basis_element(g.dim(), i)).is_zero()) {
            ok = false;
            w = "[lam,lam] not invariant under e" + std::to_string(i + 1);
            break;
        }
    rep.add("ybe_invariance", ok, w);
    return rep;
}

/// Coboundary dual bracket [a, b]_lam = ad*_{lam# a} b - ad*_{lam# b} a;
/// the exact-differential term vanishes over a point.
inline LieBialgebra bialgebra_from_rmatrix(const LieAlgebra& g, const Multivector& lam) {
    if (!check_rmatrix(g, lam).passed())
        throw std::invalid_argument("bialgebra_from_rmatrix requires an r-matrix");
    std::size_t n = g.dim();
    Representation coad = coadjoint(g);
    LieAlgebra gstar(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            Vec xa = sharp(lam, basis_vec(n, a));
            Vec xb = sharp(lam, basis_vec(n, b));
            Vec f = vec_sub(coad.apply_vec(xa, basis_vec(n, b)),
                            coad.apply_vec(xb, basis_vec(n, a)));
            for (std::size_t k = 0; k < n; ++k) gstar.set_constant(a, b, k, f[k]);
        }
    LieBialgebra out{g, gstar};
    if (!check_jacobi(gstar).passed() || !check_cocycle(out).passed())
        throw std::runtime_error("coboundary dual failed its verification suite");
    return out;
}

/// The candidate triple (g + g*_trivial, g, gr(lam#)): same total space as
/// the double of the trivial dual, second subspace the graph of lam#.  Not
/// validated; gr(lam#) is Lagrangian always but involutive only when the
/// classical Yang-Baxter equation holds.
inline ManinTriple rmatrix_graph_triple(const LieAlgebra& g, const Multivector& lam) {
    std::size_t n = g.dim();
    DrinfeldDouble d = drinfeld_double({g, LieAlgebra::abelian(n)});
    Matrix gens(n, 2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        Vec x = sharp(lam, basis_vec(n, a));
        for (std::size_t k = 0; k < n; ++k) gens.at(a, k) = x[k];
        gens.at(a, n + a) = 1;
    }
    return {d.total, d.l1, Subspace::span(gens)};
}

/// Validated version of the graph triple above.
inline ManinTriple rmatrix_manin_triple(const LieAlgebra& g, const Multivector& lam) {
    if (!check_rmatrix(g, lam).passed())
        throw std::invalid_argument("rmatrix_manin_triple requires an r-matrix");
    ManinTriple t = rmatrix_graph_triple(g, lam);
    if (!check_manin_triple(t).passed())
        throw std::runtime_error("r-matrix Manin triple failed its verification suite");
    return t;
}

}  // namespace manin
