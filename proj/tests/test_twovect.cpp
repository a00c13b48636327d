#include <catch2/catch_amalgamated.hpp>

#include "manin/two_vect.hpp"

using namespace manin;

namespace {

// Deterministic small-rational generator for property sweeps.
struct Lcg {
    unsigned long state;
    explicit Lcg(unsigned long seed) : state(seed) {}
    long operator()() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long>((state >> 33) % 9) - 4;
    }
};

TwoVect random_twovect(std::size_t side, std::size_t core, Lcg& rng) {
    Matrix d(side, core);
    for (std::size_t i = 0; i < side; ++i)
        for (std::size_t j = 0; j < core; ++j) d.at(i, j) = rng();
    return TwoVect(side, core, d);
}

}  // namespace

TEST_CASE("groupoid structure maps") {
    TwoVect v(1, 1, Matrix{{1}});
    GroupoidMaps m = groupoid_maps(v);
    CHECK(m.t.matrix.apply(Vec{2, 3}) == Vec{5});
    CHECK(m.s.matrix.apply(Vec{2, 3}) == Vec{3});
    CHECK(m.s.matrix * m.unit.matrix == Matrix::identity(1));
    CHECK(m.t.matrix * m.unit.matrix == Matrix::identity(1));
    // unit section lands in the kernel of t - s
    CHECK(((m.t.matrix - m.s.matrix) * m.unit.matrix).is_zero());

    TwoVect v0 = TwoVect::zero(2, 3);
    GroupoidMaps m0 = groupoid_maps(v0);
    CHECK(m0.s.matrix == m0.t.matrix);
}

TEST_CASE("multiplication graph") {
    // Core 0: the graph is the diagonal.
    GroupoidGraph g0 = graph_mult(TwoVect::zero(2, 0));
    CHECK(g0.graph == Subspace::span({Vec{1, 0, 1, 0, 1, 0}, Vec{0, 1, 0, 1, 0, 1}}, 6));

    CHECK(graph_mult(TwoVect::zero(1, 1)).graph.dim() == 3);

    TwoVect v(1, 1, Matrix{{1}});
    GroupoidGraph g = graph_mult(v);
    CHECK(g.graph.dim() == 3);
    // (c,c',k) = (1,2,1): product (3,1), first (1, k + del c') = (1,3), second (2,1).
    CHECK(g.graph.contains(Vec{3, 1, 1, 3, 2, 1}));
    CHECK_FALSE(g.graph.contains(Vec{3, 1, 1, 2, 2, 1}));
}

TEST_CASE("graph dimension formula") {
    Lcg rng(7);
    for (std::size_t side = 0; side <= 3; ++side)
        for (std::size_t core = 0; core <= 3; ++core) {
            TwoVect v = random_twovect(side, core, rng);
            CHECK(graph_mult(v).graph.dim() == 2 * core + side);
        }
}

TEST_CASE("dualize") {
    TwoVect v(2, 1, Matrix{{1}, {0}});
    TwoVect d = dualize(v);
    CHECK(d.side_dim == 1);
    CHECK(d.core_dim == 2);
    CHECK(d.del == Matrix{{1, 0}});
    CHECK(dualize(d) == v);
    CHECK(dualize(TwoVect::zero(3, 2)).del.is_zero());
    CHECK(check_phi_identity(v).passed());
}

TEST_CASE("sign flip maps") {
    Matrix phi = phi_map(1);
    CHECK(phi.apply(Vec{1, 1, 1}) == Vec{1, -1, -1});
    CHECK(phi * phi == Matrix::identity(3));
    Matrix big = Phi_map(2);
    CHECK(big * big.transpose() == Matrix::identity(12));
}

TEST_CASE("dual identification matches the literal dual graph") {
    Lcg rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        TwoVect v = random_twovect(1 + trial % 3, 1 + (trial / 3) % 3, rng);
        Matrix j = dual_identification(v);
        std::size_t d = v.total_dim();
        Matrix j3(3 * d, 3 * d);
        for (std::size_t f = 0; f < 3; ++f) j3.paste(f * d, f * d, j);
        CHECK(graph_mult(dualize(v)).graph.image_under(j3) == dual_graph_mult(v).graph);
    }
}

TEST_CASE("graph duality identities") {
    // Core 0: both sides are the annihilator of the diagonal.
    CHECK(check_phi_identity(TwoVect::zero(2, 0)).passed());
    CHECK(check_Phi_identity(TwoVect::zero(2, 0)).passed());
    CHECK(check_phi_identity(TwoVect::zero(1, 1)).passed());
    CHECK(check_Phi_identity(TwoVect(1, 1, Matrix{{1}})).passed());

    Lcg rng(23);
    for (std::size_t side = 0; side <= 4; ++side)
        for (std::size_t core = 0; core <= 4; ++core) {
            TwoVect v = random_twovect(side, core, rng);
            CHECK(check_phi_identity(v).passed());
            Report r = check_Phi_identity(v);
            CHECK(r.passed());
            CHECK(r.item_passed("dimension"));
        }
}

TEST_CASE("direct sums of 2-vector spaces") {
    TwoVect v1(1, 1, Matrix{{2}});
    TwoVect v2(2, 1, Matrix{{1}, {3}});
    TwoVect s = direct_sum_twovect(v1, v2);
    CHECK(s.side_dim == 3);
    CHECK(s.core_dim == 2);
    CHECK(direct_sum_twovect(v1, TwoVect::zero(0, 0)) == v1);

    // graph_mult(v1 + v2) is the interleaving of the factor graphs.
    std::size_t d1 = v1.total_dim(), d2 = v2.total_dim(), d = s.total_dim();
    Matrix perm(3 * d, 3 * (d1 + d2));
    for (std::size_t f = 0; f < 3; ++f) {
        // (c1, c2, k1, k2) from (c1, k1) and (c2, k2)
        perm.paste(f * d, f * d1, Matrix::identity(v1.core_dim));
        perm.paste(f * d + v1.core_dim, 3 * d1 + f * d2, Matrix::identity(v2.core_dim));
        perm.paste(f * d + s.core_dim, f * d1 + v1.core_dim, Matrix::identity(v1.side_dim));
        perm.paste(f * d + s.core_dim + v1.side_dim, 3 * d1 + f * d2 + v2.core_dim,
                   Matrix::identity(v2.side_dim));
    }
    Subspace interleaved =
        direct_sum(graph_mult(v1).graph, graph_mult(v2).graph).image_under(perm);
    CHECK(graph_mult(s).graph == interleaved);
}
