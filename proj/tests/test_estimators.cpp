#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "collide/estimators.hpp"

using namespace collide;

TEST_CASE("floor estimator fixed points") {
    CHECK(estimate_floor(8.0) == 34);
    CHECK(estimate_floor(2.0) == 1);
    // (2/pi)*(1253.333...)^2 = 1000030.632... by high-precision evaluation.
    CHECK(estimate_floor(1254.0) == 1000030);
}

TEST_CASE("floor estimator rejects mean below 2") {
    CHECK_THROWS_AS(estimate_floor(1.999), std::invalid_argument);
}

TEST_CASE("debiased estimator fixed points") {
    CHECK(estimate_debiased(8.0, 109) == 34);
    // 1000030.632... / 1.0024771... = 997559.613... by high-precision oracle.
    CHECK(estimate_debiased(1254.0, 109) == 997559);
    // Correction factor tends to 1.
    CHECK(estimate_debiased(8.0, 100000000) == estimate_floor(8.0));
}

TEST_CASE("least-squares estimator fixed points") {
    CHECK(estimate_least_squares(8.0) == 34);    // 34.0752
    CHECK(estimate_least_squares(2.0) == 0);     // 0.975
    CHECK(estimate_least_squares(100.0) == 6281);  // 6281.1972
}

TEST_CASE("blocks_for_cv printed anchors") {
    CHECK(blocks_for_cv(0.10) == 109);
    CHECK(blocks_for_cv(0.15) == 49);
    // ceil(1.09 / 0.05^2) = 436; confirmed against the formula's own
    // measurement-time constants (436 * 2/3 = 290.7).
    CHECK(blocks_for_cv(0.05) == 436);
    CHECK_THROWS_AS(blocks_for_cv(0.0), std::invalid_argument);
    CHECK_THROWS_AS(blocks_for_cv(1.0), std::invalid_argument);
}

TEST_CASE("blocks_for_cv is non-increasing in the target") {
    std::uint64_t prev = blocks_for_cv(0.01);
    for (double cv = 0.02; cv < 1.0; cv += 0.01) {
        const std::uint64_t cur = blocks_for_cv(cv);
        CHECK(cur <= prev);
        prev = cur;
    }
}

TEST_CASE("estimate_from_sample dispatches and carries Y through") {
    SUBCASE("floor on the two paper blocks") {
        const EstimateReport r = estimate_from_sample(
            Sample{2, 13, 0}, Variant::floor_quadratic);
        CHECK(r.mean_w == doctest::Approx(6.5));
        CHECK(r.n_hat == 21);
    }
    SUBCASE("degenerate single-symbol alphabet") {
        const EstimateReport r =
            estimate_from_sample(Sample{3, 6, 0}, Variant::floor_quadratic);
        CHECK(r.mean_w == 2.0);
        CHECK(r.n_hat == 1);
    }
    SUBCASE("clip count passes through") {
        const EstimateReport r =
            estimate_from_sample(Sample{1, 2, 1}, Variant::debiased, 1);
        CHECK(r.clip_count_y == 1);
        CHECK(r.c == 1);
    }
    SUBCASE("empty sample is rejected") {
        CHECK_THROWS_AS(
            estimate_from_sample(Sample{0, 0, 0}, Variant::debiased),
            std::invalid_argument);
    }
}

TEST_CASE("monotonicity and variant ordering") {
    std::uint64_t prev_floor = 0;
    for (double m = 2.0; m < 400.0; m += 0.37) {
        const std::uint64_t f = estimate_floor(m);
        CHECK(f >= prev_floor);
        prev_floor = f;
        for (std::uint64_t l : {1ull, 10ull, 109ull})
            CHECK(estimate_debiased(m, l) <= f);
    }
}

TEST_CASE("quadratic variants agree asymptotically") {
    const double m = 1.0e4;
    const double f = static_cast<double>(estimate_floor(m));
    const double ls = static_cast<double>(estimate_least_squares(m));
    CHECK(std::abs(f - ls) / f < 1.0e-3);
}
