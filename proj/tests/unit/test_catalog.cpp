#include <doctest.h>

#include <map>

#include "orbitpart/catalog.hpp"
#include "orbitpart/error.hpp"

using namespace orbitpart;

TEST_SUITE("catalog") {

TEST_CASE("point bounds") {
    CHECK(required_N(3, 2) == 5);
    CHECK(required_N(4, 2) == 8);
    CHECK(required_N(12, 2) == 32);
    CHECK_THROWS_AS(required_N(2, 2), Error);

    const std::map<std::string, int> expected{
        {"cyclic:3", 5},          {"cyclic:8", 20},           {"q8", 32},
        {"binary_tetrahedral", 112}, {"binary_icosahedral", 592}, {"prism:3", 18},
        {"prism:5", 34},          {"antiprism:2", 10},        {"antiprism:5", 34},
        {"full_octahedral", 90},  {"full_octahedral_x2", 186}, {"full_icosahedral_x2", 474},
        {"rotation_tetrahedral", 42}, {"rotation_octahedral", 90}, {"rotation_icosahedral", 234},
        {"nonfaithful:12:4", 32}, {"nonfaithful:12:3", 32}};
    for (const auto& [key, n] : expected) {
        CAPTURE(key);
        const auto e = catalog_entry(key);
        CHECK(e.n_bound == n);
        CHECK(e.n_bound == (e.r - 2) * (e.d + 1) + 2);
    }
    for (int r = 3; r <= 8; ++r) CHECK(cyclic_rotation(r).n_bound == 3 * r - 4);
    for (int n = 3; n <= 5; ++n) {
        CHECK(prism_rep(n).n_bound == 8 * n - 6);
        CHECK(antiprism_rep(n).n_bound == 8 * n - 6);
    }
}

TEST_CASE("every listed entry is valid") {
    for (const auto& key : catalog_keys()) {
        CAPTURE(key);
        const auto e = catalog_entry(key);
        CHECK(e.key == key);
        CHECK(e.full_dimensional);
        CHECK(e.rep.orthogonality_residual() <= 1e-10);
        CHECK(e.rep.homomorphism_residual() <= 1e-10);
        const bool nonfaithful = key.rfind("nonfaithful", 0) == 0;
        CHECK(e.faithful == !nonfaithful);
    }
}

TEST_CASE("group orders and metadata") {
    CHECK(catalog_entry("q8").r == 8);
    CHECK(catalog_entry("binary_dihedral:3").r == 12);
    CHECK(catalog_entry("binary_tetrahedral").r == 24);
    CHECK(catalog_entry("binary_icosahedral").r == 120);
    CHECK(catalog_entry("rotation_icosahedral").r == 60);
    CHECK(catalog_entry("full_octahedral").r == 24);
    CHECK(catalog_entry("full_octahedral_x2").r == 48);
    CHECK(catalog_entry("full_icosahedral_x2").r == 120);
    CHECK(catalog_entry("permutahedron:4").r == 24);
    CHECK(prism_rep(4).expected_iso_order == 16);
    CHECK(antiprism_rep(3).expected_iso_order == 12);
    CHECK(rotation_group_rep(RotationKind::Tetrahedral).expected_iso_order == 12);
    CHECK(cyclic_rotation(7).expected_iso_order == 14);
    CHECK(antiprism_rep(3).polytope_name == "octahedron");
}

TEST_CASE("quaternion entries multiply exactly") {
    for (const char* key : {"q8", "binary_dihedral:3", "binary_tetrahedral", "binary_icosahedral"}) {
        CAPTURE(key);
        const auto e = catalog_entry(key);
        CHECK(e.rep.homomorphism_residual() <= 1e-12);
    }
    // i * j = k
    const Mat i = quaternion_left_matrix(0, 1, 0, 0), j = quaternion_left_matrix(0, 0, 1, 0);
    CHECK(max_abs(i * j - quaternion_left_matrix(0, 0, 0, 1)) == 0.0);
    const auto q8 = catalog_entry("q8");
    CHECK(q8.rep.group().label(1) == "i");
}

TEST_CASE("malformed keys") {
    CHECK_THROWS_AS(catalog_entry("nonsense"), Error);
    CHECK_THROWS_AS(catalog_entry("cyclic"), Error);
    CHECK_THROWS_AS(catalog_entry("cyclic:x"), Error);
    CHECK_THROWS_AS(catalog_entry("cyclic:2"), Error);
    CHECK_THROWS_AS(catalog_entry("q8:3"), Error);
    CHECK_THROWS_AS(catalog_entry("nonfaithful:12:5"), Error);
    CHECK_THROWS_AS(catalog_entry("permutahedron:9"), Error);
}

}  // TEST_SUITE
