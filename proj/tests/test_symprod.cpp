#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etaq/symprod.hpp"

using namespace etaq;

TEST_CASE("table for k = 3") {
    const SymProdTable t = intersection_table(3);
    CHECK(t.g == 4);
    CHECK(t.K2 == 21);
    CHECK(t.KDelta == 18);
    CHECK(t.Delta2 == -12);
    CHECK(t.genus_gamma == 4);
    CHECK(t.kernel_vector == std::array<std::int64_t, 3>{4, -2, 1});
    CHECK(t.nef_ray_diag == std::array<std::int64_t, 2>{3, 2});
    CHECK(t.nef_ray_ruling == std::array<std::int64_t, 2>{-1, 2});
    // (2K+3Delta).Delta = 2*18 + 3*(-12) = 0
    CHECK(t.ray_diag_orthogonal_delta);
    CHECK(t.ray_ruling_isotropic);
    CHECK(t.ray_diag_self > 0);
}

TEST_CASE("table for k = 4") {
    const SymProdTable t = intersection_table(4);
    CHECK(t.g == 9);
    CHECK(t.K2 == 216);
    CHECK(t.KDelta == 48);
    CHECK(t.Delta2 == -32);
    CHECK(t.kernel_vector == std::array<std::int64_t, 3>{8, -2, 3});
}

TEST_CASE("k below 3 is rejected") {
    CHECK_THROWS_AS(intersection_table(2), Error);
    CHECK_THROWS_AS(intersection_table(0), Error);
}

TEST_CASE("identities hold for the whole desk range") {
    for (int k = 3; k <= 50; ++k) {
        const SymProdTable t = intersection_table(k);
        CHECK(t.presentations_agree);
        CHECK(t.kernel_annihilated);
        CHECK(t.matrix_rank_two);
        CHECK(t.ray_diag_orthogonal_delta);
        CHECK(t.ray_ruling_isotropic);
        CHECK(t.ray_diag_self > 0);
        // Adjunction on the surface agrees with the stored genus.
        CHECK(2 * t.genus_gamma - 2 == t.gamma_matrix[0][1]);
    }
}
