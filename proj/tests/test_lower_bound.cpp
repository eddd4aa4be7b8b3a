#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "riesz/constants.hpp"
#include "riesz/lower_bound.hpp"

using namespace riesz;
using Catch::Matchers::WithinAbs;

namespace {

// sec^2(pi/2p) (p < 2) resp. csc^2(pi/2p) (p > 2): the boundary-vs-interior
// threshold in s.
double remark_threshold(double p) {
    const double pd = p <= 2.0 ? p : p / (p - 1.0);
    const double c = std::cos(std::numbers::pi / (2.0 * pd));
    return 1.0 / (c * c);
}

}  // namespace

TEST_CASE("ratio_T pointwise values") {
    CHECK_THAT(ratio_T(1.0, 1.0, {2.0, 2.0}), WithinAbs(1.0, 1e-15));
    CHECK_THAT(ratio_T(1.0, 0.0, {1.5, 2.0}), WithinAbs(1.4142136, 1e-7));
    CHECK_THROWS_AS(ratio_T(0.0, 0.0, {2.0, 2.0}), std::invalid_argument);
}

TEST_CASE("ratio_T homogeneity") {
    const ExponentPair e{1.7, 3.5};
    for (double c : {0.25, -0.5, 3.0, -117.0}) {
        for (auto [a, b] : {std::pair{1.0, 0.3}, {0.2, -1.1}, {-0.7, 0.7}}) {
            CHECK_THAT(ratio_T(c * a, c * b, e) - ratio_T(a, b, e), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("parametrization equivalence with the profile") {
    // alpha + beta = 1, alpha - beta = t: ratio_T equals the PlusCos profile.
    for (double p : {1.3, 1.5, 1.9}) {
        for (double s : {1.0, 2.0, 6.0}) {
            const ExponentPair e{p, s};
            for (int i = 0; i <= 20; ++i) {
                const double t = i / 20.0;
                const double alpha = 0.5 * (1.0 + t), beta = 0.5 * (1.0 - t);
                CHECK_THAT(ratio_T(alpha, beta, e) - profile_rho(t, e, SignBranch::PlusCos),
                           WithinAbs(0.0, 1e-12));
            }
        }
    }
}

TEST_CASE("profile_rho pointwise values") {
    CHECK_THAT(profile_rho(0.0, {1.7, 3.0}, SignBranch::PlusCos), WithinAbs(1.0, 1e-15));
    CHECK_THAT(profile_rho(0.0, {3.0, 1.0}, SignBranch::MinusCos), WithinAbs(1.0, 1e-15));
    CHECK_THAT(profile_rho(1.0, {1.5, 2.0}, SignBranch::PlusCos), WithinAbs(1.4142136, 1e-7));
    CHECK_THAT(profile_rho(1.0, {4.0, 2.0}, SignBranch::MinusCos), WithinAbs(1.8477590, 1e-7));
    CHECK_THROWS_AS(profile_rho(-0.1, {1.5, 2.0}, SignBranch::PlusCos), std::invalid_argument);
    CHECK_THROWS_AS(profile_rho(1.1, {1.5, 2.0}, SignBranch::PlusCos), std::invalid_argument);
}

TEST_CASE("sign_phi pointwise values") {
    CHECK(sign_phi(1.0, {1.5, 6.0}) == 0.0);
    CHECK(sign_phi(1.0, {1.2, 17.0}) == 0.0);
    CHECK_THAT(sign_phi(0.0, {1.5, 6.0}), WithinAbs(0.5, 1e-15));
    // Exact rational evaluation of t^5 - t - 0.5 t^6 + 0.5 at t = 1/2.
    CHECK_THAT(sign_phi(0.5, {1.5, 6.0}), WithinAbs(3.0 / 128.0, 1e-15));
    CHECK_THROWS_AS(sign_phi(2.0, {1.5, 6.0}), std::invalid_argument);
}

TEST_CASE("critical_t presence follows the case split") {
    // s (1 + cos(pi/p)) < 2: profile increasing, no interior root.
    CHECK_FALSE(critical_t({1.5, 2.0}).has_value());
    CHECK_FALSE(critical_t({1.25, 8.0}).has_value());

    // Interior root for s above the threshold.
    const auto t = critical_t({1.5, 6.0});
    REQUIRE(t.has_value());
    // Independent bisection on the explicit polynomial t^5 - t - 0.5 t^6 + 0.5.
    const double want = oracle::bisect(
        [](double x) { return std::pow(x, 5) - x - 0.5 * std::pow(x, 6) + 0.5; }, 1e-12,
        1.0 - 1e-12);
    CHECK_THAT(*t, WithinAbs(want, 1e-10));
    CHECK_THAT(*t, WithinAbs(0.5310, 1e-4));

    CHECK_THROWS_AS(critical_t({3.0, 3.0}), std::invalid_argument);  // p must be < 2
}

TEST_CASE("critical_t root correctness and sign change") {
    for (auto [p, s] : {std::pair{1.5, 6.0}, {1.5, 10.0}, {1.25, 12.0}, {1.8, 30.0}}) {
        const ExponentPair e{p, s};
        const auto t = critical_t(e);
        REQUIRE(t.has_value());
        CHECK(std::abs(sign_phi(*t, e)) <= 1e-10);
        CHECK(sign_phi(*t - 1e-6, e) > 0.0);
        CHECK(sign_phi(*t + 1e-6, e) < 0.0);
    }
}

TEST_CASE("critical_t approaches |cos(pi/p)| as s grows") {
    const double c = 0.5;  // |cos(pi/p)| at p = 1.5
    const auto t = critical_t({1.5, 200.0});
    REQUIRE(t.has_value());
    CHECK(std::abs(*t - c) < 0.02);
}

TEST_CASE("derivative-sign law for the reduced profile") {
    // sgn of the numerical derivative of F(t) = (1+t^s)^2 / (1+t^2+2t cos(pi/p))^s
    // matches sgn(Phi) away from the root.
    for (auto [p, s] : {std::pair{1.5, 6.0}, {1.3, 3.0}, {1.7, 9.0}}) {
        const ExponentPair e{p, s};
        const double c = std::cos(std::numbers::pi / p);
        const auto F = [&](double t) {
            return std::pow(1.0 + std::pow(t, s), 2.0) / std::pow(1.0 + t * t + 2.0 * t * c, s);
        };
        for (int i = 1; i < 200; ++i) {
            const double t = i / 200.0;
            const double phi = sign_phi(t, e);
            if (std::abs(phi) <= 1e-8) continue;
            const double h = 1e-7;
            const double dF = (F(t + h) - F(t - h)) / (2.0 * h);
            CHECK(std::signbit(dF) == std::signbit(phi));
        }
    }
}

TEST_CASE("lower_bound trivial and boundary cases") {
    const auto flat = lower_bound({2.0, 2.0});
    CHECK_THAT(flat.value, WithinAbs(1.0, 1e-12));

    const auto b = lower_bound({1.5, 2.0});
    CHECK(b.branch == SupBranch::BoundaryT1);
    CHECK(b.sign_branch == SignBranch::PlusCos);
    CHECK_THAT(b.value, WithinAbs(1.4142135623730951, 1e-9));
    CHECK_THAT(b.value - sharp_constant({1.5, 2.0}).value, WithinAbs(0.0, 1e-10));
}

TEST_CASE("lower_bound interior root case") {
    const ExponentPair e{1.5, 6.0};
    const auto r = lower_bound(e);
    CHECK(r.branch == SupBranch::InteriorRoot);
    const auto t = critical_t(e);
    REQUIRE(t.has_value());
    CHECK_THAT(r.value - profile_rho(*t, e, SignBranch::PlusCos), WithinAbs(0.0, 1e-9));
    CHECK_THAT(r.arg_t, WithinAbs(*t, 1e-6));

    // Dense-grid oracle over t with step 1e-6.
    const auto [ot, ov] =
        oracle::grid_max([&](double t_) { return profile_rho(t_, e, SignBranch::PlusCos); },
                         1000001);
    CHECK_THAT(r.value, WithinAbs(ov, 1e-9));
}

TEST_CASE("lower_bound consistency with the closed form below the threshold") {
    for (double p : {1.2, 1.4, 1.6, 1.8, 2.5, 3.0, 4.0, 8.0}) {
        const double cap = remark_threshold(p);
        for (double frac : {0.35, 0.7, 0.999}) {
            const double s = std::max(0.2, cap * frac);
            const ExponentPair e{p, s};
            const auto r = lower_bound(e);
            CHECK(r.branch == SupBranch::BoundaryT1);
            CHECK_THAT(r.value - sharp_constant(e).value, WithinAbs(0.0, 1e-10));
        }
    }
}

TEST_CASE("lower_bound dual mapping for p > 2") {
    const ExponentPair e{4.0, 2.0};
    const auto r = lower_bound(e);
    CHECK(r.sign_branch == SignBranch::MinusCos);
    CHECK(r.branch == SupBranch::BoundaryT1);  // s = 2 < csc^2(pi/8) = 6.83
    CHECK_THAT(r.value, WithinAbs(1.8477590650225735, 1e-9));

    // p <-> p' symmetry of the computed value.
    const auto rd = lower_bound({4.0 / 3.0, 2.0});
    CHECK_THAT(r.value - rd.value, WithinAbs(0.0, 1e-12));
}

TEST_CASE("lower_bound supremum dominates a dense profile grid") {
    for (auto [p, s] : {std::pair{1.5, 6.0}, {1.25, 14.0}, {3.0, 3.0}, {2.0, 7.0}}) {
        const ExponentPair e{p, s};
        const auto r = lower_bound(e);
        CHECK(r.value >= 1.0 - 1e-12);
        CHECK(r.arg_t >= 0.0);
        CHECK(r.arg_t <= 1.0);
        const SignBranch sb = r.sign_branch;
        double worst = -1.0;
        for (int i = 0; i <= 1000000; ++i) {
            worst = std::max(worst, profile_rho(i / 1e6, e, sb));
        }
        CHECK(r.value >= worst * (1.0 - 1e-12));
    }
}

TEST_CASE("asymptotic sweep approaches 1/sin(pi/p)") {
    const double svals[] = {8.0, 16.0, 32.0, 64.0, 128.0, 200.0};
    for (double p : {1.25, 1.5, 3.0, 4.0}) {
        const auto rows = asymptotic_sweep(p, svals);
        REQUIRE(rows.size() == 6);
        const double limit = hv_max_constant(p);
        CHECK(std::abs(rows.back().lower_bound - limit) <= 0.02);
        CHECK(std::abs(rows[5].lower_bound - rows[4].lower_bound) <= 0.005);
        for (const auto& row : rows) CHECK(row.limit == limit);
    }

    // p = 2: the profile is identically 1 for s = 2 and the value stays 1.
    const double s2[] = {2.0};
    const auto rows2 = asymptotic_sweep(2.0, s2);
    CHECK_THAT(rows2[0].lower_bound, WithinAbs(1.0, 1e-12));
}
