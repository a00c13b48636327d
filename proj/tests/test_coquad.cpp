#include <catch2/catch_amalgamated.hpp>

#include "manin/builders.hpp"
#include "manin/coquad.hpp"

using namespace manin;

namespace {

// del = inverse of the invariant-form matrix of sl2.
CoquadraticLieAlgebra sl2_coquad() {
    Matrix d(3, 3);
    d.at(0, 0) = Rational(1) / 2;
    d.at(1, 2) = 1;
    d.at(2, 1) = 1;
    return {builders::sl2(), d};
}

CrossedModule trivial_dual(const CrossedModule& cm) {
    return {LieAlgebra::abelian(cm.a.dim()), LieAlgebra::abelian(cm.theta.dim()),
            cm.phi.transpose(), Representation::zero(cm.theta.dim(), cm.a.dim())};
}

CrossedModule symmetric_action_cm() {
    Representation act;
    act.module_dim = 2;
    Matrix n(2, 2);
    n.at(0, 1) = 1;
    n.at(1, 0) = 1;
    act.action.push_back(n);
    return abelian_crossed_module(2, LieAlgebra::abelian(1), act);
}

bool same_cm(const CrossedModule& x, const CrossedModule& y) {
    if (!(x.theta == y.theta) || !(x.a == y.a) || !(x.phi == y.phi)) return false;
    if (x.act.action.size() != y.act.action.size()) return false;
    for (std::size_t i = 0; i < x.act.action.size(); ++i)
        if (!(x.act.action[i] == y.act.action[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("co-quadratic axioms") {
    CHECK(check_coquadratic({builders::sl2(), Matrix::zero(3, 3)}).passed());
    CHECK(check_coquadratic(sl2_coquad()).passed());

    Report bad = check_coquadratic({builders::sl2(), Matrix::identity(3)});
    CHECK_FALSE(bad.passed());
    CHECK(bad.item_passed("del_symmetric"));
    CHECK_FALSE(bad.item_passed("invariance"));

    Matrix asym(3, 3);
    asym.at(0, 1) = 1;
    CHECK_FALSE(check_coquadratic({builders::sl2(), asym}).item_passed("del_symmetric"));

    CHECK_THROWS_AS(check_coquadratic({builders::sl2(), Matrix::zero(2, 2)}),
                    std::invalid_argument);
}

TEST_CASE("pairing of the associated quadratic Lie 2-algebra") {
    // Abelian K = Q^2, del = diag(1, 0).
    Matrix d(2, 2);
    d.at(0, 0) = 1;
    QuadraticLie2Algebra q = coquad_to_ca({LieAlgebra::abelian(2), d});
    Vec x = {1, 0, 0, 1};  // gamma = (1,0), k = (0,1)
    Vec y = {0, 1, 1, 0};  // gamma' = (0,1), k' = (1,0)
    CHECK(q.total.form.pair(x, y) == 1);
    // <x, x> = (2 gamma(k) + gamma(del gamma)) / 2 = (0 + 1) / 2.
    CHECK(q.total.form.pair(x, x) == Rational(1) / 2);
}

TEST_CASE("coquad_to_ca produces a multiplicative Courant structure") {
    for (const CoquadraticLieAlgebra& cq :
         {sl2_coquad(), CoquadraticLieAlgebra{builders::sl2(), Matrix::zero(3, 3)},
          CoquadraticLieAlgebra{LieAlgebra::abelian(2), Matrix::identity(2)},
          CoquadraticLieAlgebra{builders::heisenberg3(), Matrix::zero(3, 3)}}) {
        QuadraticLie2Algebra q = coquad_to_ca(cq);
        CHECK(check_courant_point(q.total).passed());
        CHECK(check_multiplicativity(q).passed());
        CHECK(is_dirac_point(q.side, q.total));
        CHECK(is_mult_dirac(q, q.side));
        CHECK(check_pairing_morphism(q).passed());
    }
    CHECK_THROWS_AS(coquad_to_ca({builders::sl2(), Matrix::identity(3)}), std::invalid_argument);
}

TEST_CASE("co-quadratic data round-trips through the CA-groupoid") {
    for (const CoquadraticLieAlgebra& cq :
         {sl2_coquad(), CoquadraticLieAlgebra{builders::sl2(), Matrix::zero(3, 3)},
          CoquadraticLieAlgebra{builders::aff1(), Matrix::zero(2, 2)}}) {
        CoquadraticLieAlgebra back = ca_to_coquad(coquad_to_ca(cq));
        CHECK(back.k == cq.k);
        CHECK(back.del == cq.del);
    }
}

TEST_CASE("multiplicativity fails coherently under a pairing perturbation") {
    QuadraticLie2Algebra q = coquad_to_ca(sl2_coquad());
    // Perturb the core-core block of the pairing off the del relation.
    q.total.form.matrix.at(0, 0) = q.total.form.matrix.at(0, 0) + 1;
    Report r = check_multiplicativity(q);
    CHECK_FALSE(r.item_passed("core_pairing_via_del"));
    CHECK_FALSE(r.item_passed("graph_dirac"));
}

TEST_CASE("Dirac structures of a co-quadratic Lie algebra") {
    CoquadraticLieAlgebra cq = sl2_coquad();
    CHECK(is_coquad_dirac(cq, Subspace::full(3)));
    // The zero subspace fails: del is nondegenerate, so K* is not isotropic.
    CHECK_FALSE(is_coquad_dirac(cq, Subspace(3)));
    // Borel span{h, e}: annihilator spanned by f*, which is del-isotropic.
    Subspace borel = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
    CHECK(is_coquad_dirac(cq, borel));
    // span{e} is a subalgebra but its annihilator contains h* with <del h*, h*> != 0.
    CHECK_FALSE(is_coquad_dirac(cq, Subspace::span({{0, 1, 0}}, 3)));
    // span{h, f} is the opposite Borel; also Dirac.
    CHECK(is_coquad_dirac(cq, Subspace::span({{1, 0, 0}, {0, 0, 1}}, 3)));
}

TEST_CASE("Dirac structures correspond to multiplicative Dirac structures") {
    CoquadraticLieAlgebra cq = sl2_coquad();
    QuadraticLie2Algebra q = coquad_to_ca(cq);
    Subspace borel = Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3);
    for (const Subspace& d : {Subspace::full(3), borel}) {
        Subspace l = dirac_to_mult(cq, d);
        CHECK(is_mult_dirac(q, l));
        CHECK(mult_to_dirac(q, l) == d);
    }
    CHECK(dirac_to_mult(cq, Subspace::full(3)) == q.side);
    // d = 0 with del = 0 gives the K* block.
    CoquadraticLieAlgebra ab{LieAlgebra::abelian(2), Matrix::zero(2, 2)};
    QuadraticLie2Algebra qa = coquad_to_ca(ab);
    Subspace l0 = dirac_to_mult(ab, Subspace(2));
    CHECK(l0 == Subspace::span({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    CHECK(is_mult_dirac(qa, l0));
    CHECK(mult_to_dirac(qa, l0) == Subspace(2));
    CHECK_THROWS_AS(dirac_to_mult(cq, Subspace::span({{0, 1, 0}}, 3)), std::invalid_argument);
}

TEST_CASE("a Lagrangian subspace that is not source-closed is not multiplicative") {
    QuadraticLie2Algebra q = coquad_to_ca({LieAlgebra::abelian(2), Matrix::zero(2, 2)});
    Subspace l = Subspace::span({{1, 0, 0, 1}, {0, 1, -1, 0}}, 4);
    REQUIRE(is_lagrangian(l, q.total));
    CHECK_FALSE(is_mult_dirac(q, l));
}

TEST_CASE("co-quadratic Manin triples") {
    CoquadraticLieAlgebra ab{LieAlgebra::abelian(2), Matrix::zero(2, 2)};
    Subspace p = Subspace::span({{1, 0}}, 2), qq = Subspace::span({{0, 1}}, 2);
    CHECK(check_coquad_manin_triple(ab, p, qq).passed());
    Report r = check_coquad_manin_triple(ab, Subspace::full(2), Subspace::full(2));
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.item_passed("transverse"));
    // sl2 with the two Borels: both Dirac but not transverse (h in both).
    CoquadraticLieAlgebra cq = sl2_coquad();
    Report r2 = check_coquad_manin_triple(cq, Subspace::span({{1, 0, 0}, {0, 1, 0}}, 3),
                                          Subspace::span({{1, 0, 0}, {0, 0, 1}}, 3));
    CHECK(r2.item_passed("p_dirac"));
    CHECK(r2.item_passed("q_dirac"));
    CHECK_FALSE(r2.item_passed("transverse"));
}

TEST_CASE("double of a dual pair of crossed modules") {
    for (const CrossedModule& cm :
         {adjoint_crossed_module(builders::sl2()), adjoint_crossed_module(builders::aff1()),
          symmetric_action_cm()}) {
        Lie2Bialgebra b{cm, trivial_dual(cm)};
        REQUIRE(check_lie2bialgebra(b).passed());
        DoubledLie2Bialgebra d = double_lie2bialgebra(b);
        CHECK(check_courant_point(d.q.total).passed());
        CHECK(check_multiplicativity(d.q).passed());
        CHECK(is_mult_dirac(d.q, d.l1));
        CHECK(is_mult_dirac(d.q, d.l2));
        CHECK(d.l1.is_transverse(d.l2));
    }
}

TEST_CASE("fully abelian input doubles to an abelian quadratic Lie 2-algebra") {
    CrossedModule cm = abelian_crossed_module(2, LieAlgebra::abelian(1),
                                              Representation::zero(1, 2));
    DoubledLie2Bialgebra d = double_lie2bialgebra({cm, trivial_dual(cm)});
    CHECK(d.q.total.algebra.is_abelian());
    CHECK(check_multiplicativity(d.q).passed());
}

TEST_CASE("double of an r-matrix-induced dual pair") {
    CrossedModule cm = symmetric_action_cm();
    CrossedModule dual = dual_cm_from_rmatrix(cm, Multivector::wedge_pair(2, 0, 1));
    DoubledLie2Bialgebra d = double_lie2bialgebra({cm, dual});
    CHECK(check_multiplicativity(d.q).passed());
    CHECK(is_mult_dirac(d.q, d.l1));
    CHECK(is_mult_dirac(d.q, d.l2));
}

TEST_CASE("dual pair round-trips through its double") {
    CrossedModule sym = symmetric_action_cm();
    std::vector<Lie2Bialgebra> cases = {
        {adjoint_crossed_module(builders::sl2()), trivial_dual(adjoint_crossed_module(builders::sl2()))},
        {adjoint_crossed_module(builders::heisenberg3()),
         trivial_dual(adjoint_crossed_module(builders::heisenberg3()))},
        {sym, trivial_dual(sym)},
        {sym, dual_cm_from_rmatrix(sym, Multivector::wedge_pair(2, 0, 1))},
    };
    for (const Lie2Bialgebra& b : cases) {
        DoubledLie2Bialgebra d = double_lie2bialgebra(b);
        Lie2Bialgebra back = extract_lie2bialgebra(d.q, d.l1, d.l2);
        CHECK(same_cm(back.cm1, b.cm1));
        CHECK(same_cm(back.cm2, b.cm2));
        CHECK(check_lie2bialgebra(back).passed());
    }
}

TEST_CASE("extraction rejects non-multiplicative inputs") {
    CrossedModule cm = adjoint_crossed_module(builders::sl2());
    DoubledLie2Bialgebra d = double_lie2bialgebra({cm, trivial_dual(cm)});
    CHECK_THROWS_AS(extract_lie2bialgebra(d.q, d.l1, d.l1), std::invalid_argument);
}

TEST_CASE("the fiberwise pairing is a groupoid morphism onto the dual") {
    QuadraticLie2Algebra q = coquad_to_ca({LieAlgebra::abelian(2), Matrix::zero(2, 2)});
    CHECK(check_pairing_morphism(q).passed());
    QuadraticLie2Algebra qs = coquad_to_ca(sl2_coquad());
    CHECK(check_pairing_morphism(qs).passed());
    // Mutating the target map breaks the intertwining relation.
    qs.t.at(3, 0) = qs.t.at(3, 0) + 1;
    Report r = check_pairing_morphism(qs);
    CHECK_FALSE(r.item_passed("target_intertwined"));
}
