#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "riesz/inequalities.hpp"

using namespace riesz;
using Catch::Matchers::WithinAbs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("phi_low pointwise values") {
    const ExponentPair e{1.5, 2.0};
    CHECK_THAT(phi_low(1.0, kPi / 1.5, e), WithinAbs(0.0, 1e-12));
    // 1 - (1/2)^{3/4}, the (2 cos(pi/2p))^p factor being 1 at p = 3/2.
    CHECK_THAT(phi_low(0.0, 0.3, e), WithinAbs(0.4053964, 1e-6));
    // -1 + 2^{3/2} - tan(pi/3).
    CHECK_THAT(phi_low(1.0, 0.0, e), WithinAbs(0.0963763, 1e-6));
    CHECK_THROWS_AS(phi_low(-0.1, 0.0, e), std::invalid_argument);
    CHECK_THROWS_AS(phi_low(0.5, 4.0, e), std::invalid_argument);
}

TEST_CASE("phi_low equality manifold at (1, pi/p)") {
    // Across both proved parameter strips.
    for (int i = 1; i <= 24; ++i) {
        const double p = 1.0 + 0.25 * i / 24.0;
        CHECK_THAT(phi_low(1.0, kPi / p, {p, 4.0}), WithinAbs(0.0, 1e-12));
    }
    for (int i = 1; i < 24; ++i) {
        const double p = 1.25 + 0.75 * i / 24.0;
        CHECK_THAT(phi_low(1.0, kPi / p, {p, 2.0}), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("phi_low dominates its t = pi/p section on [pi/p, pi]") {
    for (auto [p, s] : {std::pair{1.2, 4.0}, {1.5, 2.0}, {1.75, 2.0}}) {
        const ExponentPair e{p, s};
        const double tstar = kPi / p;
        const double section_floor = -1e-12;
        for (int i = 0; i <= 60; ++i) {
            const double r = i / 60.0;
            const double base = phi_low(r, tstar, e);
            for (int j = 0; j <= 60; ++j) {
                const double t = tstar + (kPi - tstar) * j / 60.0;
                CHECK(phi_low(r, t, e) - base >= section_floor);
            }
        }
    }
}

TEST_CASE("phi_high pointwise values") {
    CHECK_THAT(phi_high(1.0, kPi / 3.0, {3.0, 3.0}), WithinAbs(0.0, 1e-12));
    CHECK_THAT(phi_high(0.0, 1.0, {2.0, 2.0}), WithinAbs(0.0, 1e-12));
    // -1 + 0 + cot(pi/6) = sqrt(3) - 1.
    CHECK_THAT(phi_high(1.0, 0.0, {3.0, 3.0}), WithinAbs(0.7320508, 1e-6));
    CHECK_THROWS_AS(phi_high(0.5, 0.1, {1.5, 2.0}), std::invalid_argument);
    // t beyond 2 pi / p for p >= 4 is outside the lemma's range.
    CHECK_THROWS_AS(phi_high(0.5, 2.0, {5.0, 5.0}), std::invalid_argument);
    CHECK_NOTHROW(phi_high(0.5, 2.0, {3.0, 3.0}));
}

TEST_CASE("phi_high equality manifold at (1, pi/p)") {
    for (int i = 0; i <= 30; ++i) {
        const double p = 2.0 + 18.0 * i / 30.0;
        for (double s : {p, 0.5 * p, std::min(2.0, p)}) {
            CHECK_THAT(phi_high(1.0, kPi / p, {p, s}), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("v_weight pointwise values") {
    CHECK_THAT(v_weight(0.0, 2.0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(v_weight(kPi / 2.0, 4.0), WithinAbs(-1.0, 1e-15));
    CHECK_THAT(v_weight(0.0, 4.0), WithinAbs(1.0, 1e-15));  // max branch at the degenerate knee
    CHECK_THROWS_AS(v_weight(0.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(v_weight(4.0, 3.0), std::invalid_argument);
}

TEST_CASE("v_weight symmetry and reflection") {
    for (double p : {2.0, 2.5, 3.0, 4.0, 5.0, 6.5}) {
        for (int i = 0; i <= 200; ++i) {
            const double t = -kPi + 2.0 * kPi * i / 200.0;
            CHECK_THAT(v_weight(t, p) - v_weight(-t, p), WithinAbs(0.0, 1e-12));
            if (p >= 4.0 && std::abs(t) >= kPi / 2.0) {
                CHECK_THAT(v_weight(t, p) - v_weight(kPi - std::abs(t), p), WithinAbs(0.0, 1e-12));
            }
        }
    }
}

TEST_CASE("phi_t0 pointwise values") {
    CHECK_THAT(phi_t0(1.0, 2.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(phi_t0(0.0, 2.0), WithinAbs(0.0, 1e-12));
    CHECK_THAT(phi_t0(0.5, 4.0), WithinAbs(0.2544418, 1e-6));
    CHECK_THROWS_AS(phi_t0(0.5, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(phi_t0(1.5, 3.0), std::invalid_argument);
}

TEST_CASE("h_claim values and monotonicity") {
    CHECK_THAT(h_claim(2.0), WithinAbs(0.5, 1e-15));
    CHECK_THAT(h_claim(3.0), WithinAbs(1.0, 1e-15));
    CHECK_THAT(h_claim(6.0), WithinAbs(51.98, 0.01));
    CHECK_THROWS_AS(h_claim(1.9), std::invalid_argument);

    double prev = h_claim(2.0);
    for (int i = 1; i < 1000; ++i) {
        const double p = 2.0 + 62.0 * i / 999.0;
        const double cur = h_claim(p);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("g_aux values, limit, monotonicity, floor") {
    CHECK_THAT(g_aux(0.5, 2.0), WithinAbs(0.0, 1e-15));
    CHECK_THAT(g_aux(0.5, 4.0), WithinAbs(-0.4, 1e-15));
    CHECK_THAT(g_aux(1.0 - 1e-9, 4.0), WithinAbs(-0.5, 1e-15));  // removable singularity
    CHECK_THROWS_AS(g_aux(0.0, 4.0), std::invalid_argument);
    CHECK_THROWS_AS(g_aux(0.5, 1.5), std::invalid_argument);

    for (double s : {2.0, 3.0, 4.0, 8.0}) {
        const double floor = -(s - 2.0) / s - 1e-12;
        double prev = g_aux(1e-3, s);
        CHECK(prev >= floor);
        for (int i = 1; i < 1000; ++i) {
            const double r = (i + 0.5) / 1000.0;
            const double cur = g_aux(r, s);
            CHECK(cur <= prev + 1e-12);
            CHECK(cur >= floor);
            prev = cur;
        }
    }
}

TEST_CASE("power mean transfer pointwise values") {
    {
        const auto [lhs, rhs] = power_mean_transfer(1.0, 1.0, 1.0, 3.0, 2.0);
        CHECK(lhs == 1.0);
        CHECK(rhs == 1.0);
    }
    {
        const auto [lhs, rhs] = power_mean_transfer(1.0, 0.0, 1.0, 2.0, 2.0);
        CHECK_THAT(lhs, WithinAbs(0.25, 1e-15));
        CHECK_THAT(rhs, WithinAbs(0.5, 1e-15));
    }
    {
        const auto [lhs, rhs] = power_mean_transfer(2.0, 1.0, 1.5, 3.0, 2.5);
        CHECK(lhs <= rhs);
    }
    CHECK_THROWS_AS(power_mean_transfer(1.0, 1.0, 2.0, 1.0, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(power_mean_transfer(-1.0, 1.0, 1.0, 2.0, 2.0), std::invalid_argument);
}

TEST_CASE("power mean transfer property on random tuples") {
    std::mt19937_64 eng(7);
    std::uniform_real_distribution<double> val(0.0, 5.0), ord(0.2, 8.0), pp(0.5, 6.0);
    for (int i = 0; i < 1000; ++i) {
        const double a = val(eng), b = val(eng);
        double s = ord(eng), s0 = ord(eng);
        if (s > s0) std::swap(s, s0);
        const auto [lhs, rhs] = power_mean_transfer(a, b, s, s0, pp(eng));
        CHECK(lhs <= rhs * (1.0 + 1e-12) + 1e-300);
    }
    // Equality cases: a = b, or s = s0.
    const auto [l1, r1] = power_mean_transfer(1.7, 1.7, 1.0, 5.0, 2.2);
    CHECK_THAT(l1 - r1, WithinAbs(0.0, 1e-12));
    const auto [l2, r2] = power_mean_transfer(2.0, 0.4, 3.3, 3.3, 2.2);
    CHECK_THAT(l2 - r2, WithinAbs(0.0, 1e-12));
}
