#pragma once

#include <algorithm>

#include "manin/poly.hpp"
#include "manin/report.hpp"

namespace manin {

/// Lie algebroid over affine n-space with a free polynomial module of
/// sections: anchor and generator brackets have polynomial coefficients,
/// and brackets of general sections follow from the Leibniz rule.
struct PolyLieAlgebroid {
    std::size_t rank = 0;
    std::size_t nvars = 0;
    std::vector<PolyVec> anchor;                     // anchor[a][i]: coefficient of d_i in rho(e_a)
    std::vector<std::vector<PolyVec>> c;             // c[a][b][k]: [e_a, e_b] = sum_k c[a][b][k] e_k

    static PolyLieAlgebroid tangent(std::size_t n) {
        PolyLieAlgebroid t;
        t.rank = n;
        t.nvars = n;
        t.anchor.assign(n, poly_vec(n, n));
        for (std::size_t a = 0; a < n; ++a) t.anchor[a][a] = Poly::constant(n, 1);
        t.c.assign(n, std::vector<PolyVec>(n, poly_vec(n, n)));
        return t;
    }

    Poly anchor_derivative(std::size_t a, const Poly& f) const {
        Poly r(nvars);
        for (std::size_t i = 0; i < nvars; ++i) r = r + anchor[a][i] * f.partial(i);
        return r;
    }

    /// Leibniz-extended bracket of sections given as coefficient vectors.
    PolyVec bracket_sections(const PolyVec& x, const PolyVec& y) const {
        PolyVec r = poly_vec(rank, nvars);
        for (std::size_t a = 0; a < rank; ++a)
            for (std::size_t b = 0; b < rank; ++b) {
                if (x[a].is_zero() && y[b].is_zero()) continue;
                for (std::size_t k = 0; k < rank; ++k) r[k] = r[k] + x[a] * y[b] * c[a][b][k];
            }
        for (std::size_t a = 0; a < rank; ++a)
            for (std::size_t b = 0; b < rank; ++b) {
                r[b] = r[b] + x[a] * anchor_derivative(a, y[b]);
                r[b] = r[b] - y[a] * anchor_derivative(a, x[b]);
            }
        return r;
    }

    PolyVec anchor_of(const PolyVec& x) const {
        PolyVec r = poly_vec(nvars, nvars);
        for (std::size_t a = 0; a < rank; ++a)
            for (std::size_t i = 0; i < nvars; ++i) r[i] = r[i] + x[a] * anchor[a][i];
        return r;
    }
};

inline PolyVec vector_field_bracket(const PolyVec& x, const PolyVec& y) {
    std::size_t n = x.size();
    PolyVec r = poly_vec(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r[i] = r[i] + x[j] * y[i].partial(j) - y[j] * x[i].partial(j);
    return r;
}

/// All monomial coefficient vectors of total degree <= deg (used for the
/// Leibniz-consistency sweeps).
inline std::vector<Poly> monomials_up_to(std::size_t nvars, unsigned deg) {
    std::vector<Poly::Key> keys = {Poly::Key(nvars, 0)};
    for (unsigned d = 0; d < deg; ++d) {
        std::size_t sz = keys.size();
        for (std::size_t s = 0; s < sz; ++s)
            for (std::size_t i = 0; i < nvars; ++i) {
                auto k = keys[s];
                ++k[i];
                if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
            }
    }
    std::vector<Poly> out;
    for (const auto& k : keys) out.push_back(Poly::monomial(nvars, k, 1));
    return out;
}

inline Report check_algebroid_axioms(const PolyLieAlgebroid& a) {
    Report rep;
    rep.subject = "poly_lie_algebroid";
    auto gen = [&](std::size_t i) {
        PolyVec v = poly_vec(a.rank, a.nvars);
        v[i] = Poly::constant(a.nvars, 1);
        return v;
    };
    bool anti = true;
    std::string wa;
    for (std::size_t i = 0; i < a.rank && anti; ++i)
        for (std::size_t j = 0; j < a.rank && anti; ++j)
            for (std::size_t k = 0; k < a.rank; ++k)
                if (!(a.c[i][j][k] + a.c[j][i][k]).is_zero()) {
                    anti = false;
                    wa = index_witness({i, j, k});
                    break;
                }
    rep.add("antisymmetry", anti, wa);
    bool jac = true;
    std::string wj;
    for (std::size_t i = 0; i < a.rank && jac; ++i)
        for (std::size_t j = 0; j < a.rank && jac; ++j)
            for (std::size_t k = 0; k < a.rank && jac; ++k) {
                PolyVec s = a.bracket_sections(gen(i), a.bracket_sections(gen(j), gen(k)));
                PolyVec t = a.bracket_sections(gen(j), a.bracket_sections(gen(k), gen(i)));
                PolyVec u = a.bracket_sections(gen(k), a.bracket_sections(gen(i), gen(j)));
                for (std::size_t m = 0; m < a.rank; ++m)
                    if (!(s[m] + t[m] + u[m]).is_zero()) {
                        jac = false;
                        wj = index_witness({i, j, k});
                        break;
                    }
            }
    rep.add("jacobi", jac, wj);
    bool mor = true;
    std::string wm;
    for (std::size_t i = 0; i < a.rank && mor; ++i)
        for (std::size_t j = 0; j < a.rank; ++j) {
            PolyVec lhs = a.anchor_of(a.bracket_sections(gen(i), gen(j)));
            PolyVec rhs = vector_field_bracket(a.anchor[i], a.anchor[j]);
            bool eq = true;
            for (std::size_t m = 0; m < a.nvars; ++m) eq = eq && lhs[m] == rhs[m];
            if (!eq) {
                mor = false;
                wm = index_witness({i, j});
                break;
            }
        }
    rep.add("anchor_morphism", mor, wm);
    return rep;
}

/// In a Leibniz-constructed bracket, [f e_i, g e_j] must equal
/// fg [e_i,e_j] + f rho(e_i)(g) e_j - g rho(e_j)(f) e_i; swept over
/// monomials of bounded degree as a consistency layer.
inline bool check_leibniz_consistency(const PolyLieAlgebroid& a, unsigned deg) {
    auto gen = [&](std::size_t i, const Poly& f) {
        PolyVec v = poly_vec(a.rank, a.nvars);
        v[i] = f;
        return v;
    };
    std::vector<Poly> ms = monomials_up_to(a.nvars, deg);
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = 0; j < a.rank; ++j)
            for (const Poly& f : ms)
                for (const Poly& g : ms) {
                    PolyVec lhs = a.bracket_sections(gen(i, f), gen(j, g));
                    PolyVec rhs = poly_vec(a.rank, a.nvars);
                    for (std::size_t k = 0; k < a.rank; ++k) rhs[k] = f * g * a.c[i][j][k];
                    rhs[j] = rhs[j] + f * a.anchor_derivative(i, g);
                    rhs[i] = rhs[i] - g * a.anchor_derivative(j, f);
                    for (std::size_t k = 0; k < a.rank; ++k)
                        if (lhs[k] != rhs[k]) return false;
                }
    return true;
}

/// Standard Courant algebroid on affine n-space: sections are pairs
/// (vector field, one-form), with the Dorfman bracket and half-sum pairing.
struct PolyCourant {
    std::size_t n = 0;

    struct Section {
        PolyVec x;      // vector-field coefficients
        PolyVec alpha;  // one-form coefficients
    };

    Section zero_section() const { return {poly_vec(n, n), poly_vec(n, n)}; }
    Section vector_gen(std::size_t i) const {
        Section s = zero_section();
        s.x[i] = Poly::constant(n, 1);
        return s;
    }
    Section form_gen(std::size_t i) const {
        Section s = zero_section();
        s.alpha[i] = Poly::constant(n, 1);
        return s;
    }

    /// [[(X, a), (Y, b)]] = ([X, Y], L_X b - i_Y da).
    Section dorfman(const Section& e1, const Section& e2) const {
        Section r = zero_section();
        r.x = vector_field_bracket(e1.x, e2.x);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                r.alpha[i] = r.alpha[i] + e1.x[j] * e2.alpha[i].partial(j) +
                             e2.alpha[j] * e1.x[j].partial(i);
                r.alpha[i] = r.alpha[i] -
                             e2.x[j] * (e1.alpha[i].partial(j) - e1.alpha[j].partial(i));
            }
        }
        return r;
    }

    Poly pairing(const Section& e1, const Section& e2) const {
        Poly p(n);
        for (std::size_t i = 0; i < n; ++i)
            p = p + e1.x[i] * e2.alpha[i] + e2.x[i] * e1.alpha[i];
        return p * (Rational(1) / 2);
    }

    PolyVec anchor(const Section& e) const { return e.x; }

    /// D f = (0, df), the coanchor of the differential.
    Section coanchor_d(const Poly& f) const {
        Section s = zero_section();
        for (std::size_t i = 0; i < n; ++i) s.alpha[i] = f.partial(i);
        return s;
    }

    Section add(const Section& a, const Section& b) const {
        Section r = zero_section();
        for (std::size_t i = 0; i < n; ++i) {
            r.x[i] = a.x[i] + b.x[i];
            r.alpha[i] = a.alpha[i] + b.alpha[i];
        }
        return r;
    }
    Section scale(const Rational& s, const Section& a) const {
        Section r = zero_section();
        for (std::size_t i = 0; i < n; ++i) {
            r.x[i] = a.x[i] * s;
            r.alpha[i] = a.alpha[i] * s;
        }
        return r;
    }
    Section mul(const Poly& f, const Section& a) const {
        Section r = zero_section();
        for (std::size_t i = 0; i < n; ++i) {
            r.x[i] = f * a.x[i];
            r.alpha[i] = f * a.alpha[i];
        }
        return r;
    }
    bool section_is_zero(const Section& a) const {
        for (std::size_t i = 0; i < n; ++i)
            if (!a.x[i].is_zero() || !a.alpha[i].is_zero()) return false;
        return true;
    }
};

inline PolyCourant standard_courant(std::size_t n) {
    if (n == 0) throw std::invalid_argument("standard Courant algebroid needs n >= 1");
    return {n};
}

/// C1 (Jacobi in Leibniz form) for the Dorfman bracket over a list of
/// sections: [[e1, [[e2, e3]]]] = [[[[e1, e2]], e3]] + [[e2, [[e1, e3]]]].
inline Report check_courant_c1(const PolyCourant& ca,
                               const std::vector<PolyCourant::Section>& sections) {
    Report rep;
    rep.subject = "poly_courant_c1";
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < sections.size() && ok; ++i)
        for (std::size_t j = 0; j < sections.size() && ok; ++j)
            for (std::size_t k = 0; k < sections.size(); ++k) {
                auto lhs = ca.dorfman(sections[i], ca.dorfman(sections[j], sections[k]));
                auto rhs = ca.add(ca.dorfman(ca.dorfman(sections[i], sections[j]), sections[k]),
                                  ca.dorfman(sections[j], ca.dorfman(sections[i], sections[k])));
                if (!ca.section_is_zero(ca.add(lhs, ca.scale(-1, rhs)))) {
                    ok = false;
                    w = index_witness({i, j, k});
                    break;
                }
            }
    rep.add("c1_jacobi", ok, w);
    return rep;
}

inline std::vector<PolyCourant::Section> courant_generators(const PolyCourant& ca) {
    std::vector<PolyCourant::Section> g;
    for (std::size_t i = 0; i < ca.n; ++i) g.push_back(ca.vector_gen(i));
    for (std::size_t i = 0; i < ca.n; ++i) g.push_back(ca.form_gen(i));
    return g;
}

/// C2 (anchor derivation of the pairing) and C3 (symmetrized bracket equals
/// the coanchor differential of the pairing), on a section list.
inline Report check_courant_c2_c3(const PolyCourant& ca,
                                  const std::vector<PolyCourant::Section>& sections) {
    Report rep;
    rep.subject = "poly_courant_c2_c3";
    bool c2 = true, c3 = true;
    std::string w2, w3;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = 0; j < sections.size(); ++j) {
            if (c3) {
                auto sym = ca.add(ca.dorfman(sections[i], sections[j]),
                                  ca.dorfman(sections[j], sections[i]));
                auto rhs = ca.coanchor_d(ca.pairing(sections[i], sections[j]) * Rational(2));
                if (!ca.section_is_zero(ca.add(sym, ca.scale(-1, rhs)))) {
                    c3 = false;
                    w3 = index_witness({i, j});
                }
            }
            for (std::size_t k = 0; k < sections.size() && c2; ++k) {
                Poly lhs(ca.n);
                const PolyVec rho = ca.anchor(sections[i]);
                Poly pr = ca.pairing(sections[j], sections[k]);
                for (std::size_t m = 0; m < ca.n; ++m) lhs = lhs + rho[m] * pr.partial(m);
                Poly rhs = ca.pairing(ca.dorfman(sections[i], sections[j]), sections[k]) +
                           ca.pairing(sections[j], ca.dorfman(sections[i], sections[k]));
                if (lhs != rhs) {
                    c2 = false;
                    w2 = index_witness({i, j, k});
                }
            }
        }
    rep.add("c2_anchor_derivation", c2, w2);
    rep.add("c3_symmetrization", c3, w3);
    return rep;
}

/// Poisson condition for a polynomial bivector, decided two independent
/// ways: vanishing Schouten square, and involutivity of the graph sections
/// (pi#(dx_i), dx_i) under the Dorfman bracket modulo the graph.
inline Report check_poisson_graph(const PolyMultivector& pi) {
    if (pi.degree() != 2) throw std::invalid_argument("expected a bivector");
    Report rep;
    rep.subject = "poisson_graph";
    std::size_t n = pi.nvars();
    bool schouten_zero = schouten_poly(pi, pi).is_zero();
    rep.add("schouten_square_zero", schouten_zero);
    // pi as an antisymmetric coefficient matrix: pi#(dx_i) = sum_j m[i][j] d_j.
    std::vector<PolyVec> m(n, poly_vec(n, n));
    for (const auto& [key, coeff] : pi.terms()) {
        m[key[0]][key[1]] = m[key[0]][key[1]] + coeff;
        m[key[1]][key[0]] = m[key[1]][key[0]] - coeff;
    }
    PolyCourant ca{n};
    auto graph_section = [&](std::size_t i) {
        PolyCourant::Section s = ca.zero_section();
        s.alpha[i] = Poly::constant(n, 1);
        s.x = m[i];
        return s;
    };
    bool involutive = true;
    std::string w;
    for (std::size_t i = 0; i < n && involutive; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyCourant::Section d = ca.dorfman(graph_section(i), graph_section(j));
            // Residual: vector part minus pi# of the form part.
            PolyVec res = d.x;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) res[b] = res[b] - d.alpha[a] * m[a][b];
            for (std::size_t a = 0; a < n; ++a)
                if (!res[a].is_zero()) {
                    involutive = false;
                    w = index_witness({i, j}) + " residual " + res[a].str();
                    break;
                }
        }
    rep.add("graph_involutive", involutive, w);
    if (schouten_zero != involutive)
        throw std::logic_error("Poisson verdicts disagree: internal error");
    return rep;
}

/// Invariance condition on a symmetric polynomial matrix del over a Lie
/// algebroid with (possibly) nonzero anchor:
/// rho(e_a)<del g_i, g_j> + <L_a g_i, del g_j> + <L_a g_j, del g_i> = 0.
inline Report coquad_invariance_poly(const PolyLieAlgebroid& k,
                                     const std::vector<PolyVec>& del) {
    Report rep;
    rep.subject = "coquad_invariance_poly";
    std::size_t r = k.rank;
    if (del.size() != r) throw std::invalid_argument("del must be rank x rank");
    for (std::size_t i = 0; i < r; ++i) {
        if (del[i].size() != r) throw std::invalid_argument("del must be rank x rank");
        for (std::size_t j = 0; j < r; ++j)
            if (del[i][j] != del[j][i]) throw std::invalid_argument("del must be symmetric");
    }
    bool inv = true;
    std::string w;
    for (std::size_t a = 0; a < r && inv; ++a)
        for (std::size_t i = 0; i < r && inv; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                // <del g_i, g_j> = del[j][i]; L_a g_i = -sum_k c[a][k][i] g_k.
                Poly lhs = k.anchor_derivative(a, del[j][i]);
                for (std::size_t x = 0; x < r; ++x)
                    lhs = lhs + k.c[a][x][i] * del[x][j] + k.c[a][x][j] * del[x][i];
                if (!lhs.is_zero()) {
                    inv = false;
                    w = index_witness({a, i, j}) + " residual " + lhs.str();
                    break;
                }
            }
    rep.add("invariance", inv, w);
    return rep;
}

}  // namespace manin
