#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "manin/catalog.hpp"

using namespace manin;

#ifndef MANIN_SOURCE_DIR
#define MANIN_SOURCE_DIR "."
#endif

TEST_CASE("required entries are present") {
    for (const char* name :
         {"abelian_1", "abelian_2", "abelian_3", "abelian_4", "sl2", "heisenberg3", "aff1",
          "aff1_bialgebra", "sl2_rmatrix", "adjoint_cm_sl2", "trivial_cm", "coquad_sl2",
          "poly_tangent_line", "poly_poisson_xy"})
        CHECK_NOTHROW(catalog_load(name));
    CHECK_THROWS_AS(catalog_load("no_such_entry"), std::out_of_range);
}

TEST_CASE("every entry reproduces its committed verdicts") {
    Report r = catalog_verify_all();
    for (const auto& it : r.items) {
        INFO(it.name << ": " << it.witness);
        CHECK(it.pass);
    }
}

TEST_CASE("positive entries pass, negative entries fail") {
    for (const auto& e : catalog()) {
        Report r = run_structure_checks(e.file);
        bool is_negative = e.name.rfind("neg_", 0) == 0 || !e.expected_failures.empty();
        INFO(e.name);
        CHECK(r.passed() == !is_negative);
    }
}

TEST_CASE("committed data files match the in-code catalog byte for byte") {
    for (const auto& e : catalog()) {
        std::string path =
            std::string(MANIN_SOURCE_DIR) + "/data/catalog/v1/" + e.name + ".json";
        std::ifstream in(path);
        INFO(path);
        REQUIRE(in.good());
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        CHECK(text == dump_structure(catalog_entry_json(e)));
    }
}

TEST_CASE("sample expectations") {
    CHECK(run_structure_checks(catalog_load("abelian_2").file).passed());
    Report r = run_structure_checks(catalog_load("sl2_rmatrix").file);
    CHECK(r.item_passed("rmatrix.ybe_invariance"));  // generalized Yang-Baxter holds
    CHECK_FALSE(r.item_passed("rmatrix_triple.l2_dirac"));  // graph not involutive
    CHECK(run_structure_checks(catalog_load("sl2_rmatrix_he").file).passed());
}
