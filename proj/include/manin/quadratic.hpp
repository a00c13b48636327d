#pragma once

#include "manin/lie.hpp"
#include "manin/report.hpp"
#include "manin/subspace.hpp"

namespace manin {

struct BilinearForm {
    Matrix matrix;

    std::size_t dim() const { return matrix.rows(); }
    Rational pair(const Vec& x, const Vec& y) const { return dot(x, matrix.apply(y)); }
    bool is_symmetric() const { return matrix.is_symmetric(); }
    bool is_nondegenerate() const { return matrix.rank() == matrix.rows(); }
};

/// Lie algebra with an invariant nondegenerate symmetric form. At point
/// base this is exactly a Courant algebroid.
struct QuadraticLieAlgebra {
    LieAlgebra algebra;
    BilinearForm form;
};

inline Report check_invariance(const QuadraticLieAlgebra& q) {
    Report rep;
    rep.subject = "quadratic_lie_algebra";
    rep.add("form_symmetric", q.form.is_symmetric());
    rep.add("form_nondegenerate", q.form.is_nondegenerate());
    std::size_t n = q.algebra.dim();
    bool ok = q.form.dim() == n;
    std::string w = ok ? "" : "form size mismatch";
    for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec ei = basis_vec(n, i), ej = basis_vec(n, j), ek = basis_vec(n, k);
                Rational lhs = q.form.pair(q.algebra.bracket(ei, ej), ek) +
                               q.form.pair(ej, q.algebra.bracket(ei, ek));
                if (lhs != 0) {
                    ok = false;
                    w = index_witness({i, j, k}) + " residual " + to_string(lhs);
                    break;
                }
            }
    rep.add("invariance", ok, w);
    return rep;
}

/// Courant axioms at a point: the anchor and d vanish, so C1 = Jacobi,
/// C2 = invariance, C3 = antisymmetry, C4 is vacuous.
inline Report check_courant_point(const QuadraticLieAlgebra& q) {
    Report rep;
    rep.subject = "courant_point";
    Report jac = check_jacobi(q.algebra);
    Report inv = check_invariance(q);
    rep.add("C1_jacobi", jac.item_passed("jacobi"));
    rep.add("C2_invariance", inv.item_passed("invariance") && inv.item_passed("form_symmetric") &&
                                 inv.item_passed("form_nondegenerate"));
    rep.add("C3_antisymmetry", jac.item_passed("antisymmetry"));
    rep.add("C4_leibniz_vacuous", true);
    return rep;
}

inline bool is_lagrangian(const Subspace& s, const QuadraticLieAlgebra& q) {
    return s.orthogonal_complement(q.form.matrix) == s;
}

inline bool is_dirac_point(const Subspace& s, const QuadraticLieAlgebra& q) {
    return is_lagrangian(s, q) && is_subalgebra(s, q.algebra);
}

struct ManinTriple {
    QuadraticLieAlgebra total;
    Subspace l1;
    Subspace l2;
};

inline Report check_manin_triple(const ManinTriple& t) {
    Report rep;
    rep.subject = "manin_triple";
    rep.merge(check_courant_point(t.total), "total");
    rep.add("l1_dirac", is_dirac_point(t.l1, t.total));
    rep.add("l2_dirac", is_dirac_point(t.l2, t.total));
    rep.add("transverse", t.l1.is_transverse(t.l2));
    return rep;
}

inline QuadraticLieAlgebra conjugate_bar(const QuadraticLieAlgebra& q) {
    return {q.algebra, BilinearForm{-q.form.matrix}};
}

}  // namespace manin
