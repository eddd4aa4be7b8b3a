#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "riesz/fft.hpp"
#include "riesz/trig_polynomial.hpp"

using namespace riesz;
using Catch::Matchers::WithinAbs;
using cplx = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<cplx> sample_function(auto&& f, std::size_t n) {
    std::vector<cplx> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = f(grid_theta(k, n));
    return out;
}

TrigPolynomial random_poly(std::mt19937_64& eng, int degree) {
    std::normal_distribution<double> g;
    TrigPolynomial f(degree);
    for (int n = -degree; n <= degree; ++n) f.set_coeff(n, {g(eng), g(eng)});
    return f;
}

}  // namespace

TEST_CASE("fft matches the plain DFT sum") {
    std::mt19937_64 eng(5);
    std::normal_distribution<double> g;
    std::vector<cplx> samples(64);
    for (auto& v : samples) v = {g(eng), g(eng)};

    const auto fast = analyze(samples, 20);
    const auto plain = oracle::dft_half_offset(samples, 20);
    for (int n = -20; n <= 20; ++n) {
        CHECK_THAT(std::abs(fast.coeff(n) - plain[n + 20]), WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("analyze recovers simple spectra") {
    const auto ones = sample_function([](double) { return cplx{1.0, 0.0}; }, 64);
    const auto f1 = analyze(ones, 8);
    CHECK_THAT(std::abs(f1.coeff(0) - 1.0), WithinAbs(0.0, 1e-13));
    for (int n = 1; n <= 8; ++n) {
        CHECK_THAT(std::abs(f1.coeff(n)), WithinAbs(0.0, 1e-13));
        CHECK_THAT(std::abs(f1.coeff(-n)), WithinAbs(0.0, 1e-13));
    }

    const auto cosines = sample_function([](double t) { return cplx{2.0 * std::cos(t), 0.0}; }, 64);
    const auto f2 = analyze(cosines, 4);
    CHECK_THAT(std::abs(f2.coeff(1) - 1.0), WithinAbs(0.0, 1e-13));
    CHECK_THAT(std::abs(f2.coeff(-1) - 1.0), WithinAbs(0.0, 1e-13));
    CHECK_THAT(std::abs(f2.coeff(0)), WithinAbs(0.0, 1e-13));

    const auto expo = sample_function([](double t) { return std::polar(1.0, 3.0 * t); }, 8);
    const auto f3 = analyze(expo, 3);
    CHECK_THAT(std::abs(f3.coeff(3) - 1.0), WithinAbs(0.0, 1e-13));

    CHECK_THROWS_AS(analyze(expo, 4), std::invalid_argument);  // needs 2N+1 samples
}

TEST_CASE("analysis then synthesis is the identity on polynomials") {
    std::mt19937_64 eng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const auto f = random_poly(eng, 9);
        const auto samples = synthesize(f, 64);
        const auto g = analyze(samples, 9);
        for (int n = -9; n <= 9; ++n) {
            CHECK_THAT(std::abs(f.coeff(n) - g.coeff(n)), WithinAbs(0.0, 1e-12));
        }
        // Odd sample counts exercise the direct (non-FFT) path.
        const auto g2 = analyze(synthesize(f, 63), 9);
        for (int n = -9; n <= 9; ++n) {
            CHECK_THAT(std::abs(f.coeff(n) - g2.coeff(n)), WithinAbs(0.0, 1e-12));
        }
    }
}

TEST_CASE("projections are complementary and idempotent") {
    std::mt19937_64 eng(23);
    const auto f = random_poly(eng, 12);
    const auto plus = project_plus(f);
    const auto minus = project_minus(f);
    for (int n = -12; n <= 12; ++n) {
        CHECK(plus.coeff(n) + minus.coeff(n) == f.coeff(n));  // exact completeness
        CHECK(project_plus(plus).coeff(n) == plus.coeff(n));  // idempotent
        CHECK(project_plus(minus).coeff(n) == cplx{});        // orthogonal ranges
    }

    // 2 cos(theta) splits into e^{i theta} and e^{-i theta}.
    TrigPolynomial c(1);
    c.set_coeff(1, 1.0);
    c.set_coeff(-1, 1.0);
    CHECK(project_plus(c).coeff(1) == cplx{1.0, 0.0});
    CHECK(project_plus(c).coeff(-1) == cplx{});
    CHECK(project_minus(c).coeff(-1) == cplx{1.0, 0.0});
}

TEST_CASE("conjugate function multiplier") {
    // cos -> sin, sin -> -cos, constants -> 0.
    TrigPolynomial c(1);
    c.set_coeff(1, {0.5, 0.0});
    c.set_coeff(-1, {0.5, 0.0});  // cos(theta)
    const auto hc = conjugate_function(c);
    // sin(theta) = (e^{i t} - e^{-i t}) / (2i): coefficients -i/2 * sgn.
    CHECK_THAT(std::abs(hc.coeff(1) - cplx{0.0, -0.5}), WithinAbs(0.0, 1e-15));
    CHECK_THAT(std::abs(hc.coeff(-1) - cplx{0.0, 0.5}), WithinAbs(0.0, 1e-15));

    TrigPolynomial k(0);
    k.set_coeff(0, {3.0, 0.0});
    CHECK(conjugate_function(k).coeff(0) == cplx{});

    // H^2 = -(I - mean).
    std::mt19937_64 eng(29);
    const auto f = random_poly(eng, 6);
    const auto hh = conjugate_function(conjugate_function(f));
    for (int n = -6; n <= 6; ++n) {
        const cplx want = n == 0 ? cplx{} : -f.coeff(n);
        CHECK_THAT(std::abs(hh.coeff(n) - want), WithinAbs(0.0, 1e-15));
    }
}

TEST_CASE("lp norms against closed moments") {
    TrigPolynomial c(1);
    c.set_coeff(1, 1.0);
    c.set_coeff(-1, 1.0);  // 2 cos(theta)

    CHECK_THAT(lp_norm(c, 2.0, 4096), WithinAbs(std::sqrt(2.0), 1e-9));
    // mean of (2cos)^4 = 6.
    CHECK_THAT(lp_norm(c, 4.0, 4096), WithinAbs(std::pow(6.0, 0.25), 1e-7));

    TrigPolynomial one(0);
    one.set_coeff(0, 1.0);
    for (double p : {0.7, 1.0, 2.0, 5.0}) CHECK_THAT(lp_norm(one, p, 64), WithinAbs(1.0, 1e-12));

    CHECK_THROWS_AS(lp_norm(c, 0.0, 64), std::invalid_argument);
    CHECK_THROWS_AS(lp_norm(c, 2.0, 100), std::invalid_argument);  // not a power of two
}

TEST_CASE("parseval identity") {
    std::mt19937_64 eng(31);
    const auto f = random_poly(eng, 16);
    double sum = 0.0;
    for (int n = -16; n <= 16; ++n) sum += std::norm(f.coeff(n));
    const double l2 = lp_norm(f, 2.0, 128);
    CHECK_THAT(l2 * l2 - sum, WithinAbs(0.0, 1e-12 * sum));
}

TEST_CASE("quadrature convergence by grid doubling") {
    std::mt19937_64 eng(37);
    const auto f = random_poly(eng, 8);
    const double n1 = lp_norm_converged(f, 3.0, 64);
    const double n2 = lp_norm(f, 3.0, 1 << 14);
    CHECK_THAT(n1 - n2, WithinAbs(0.0, 1e-6 * n2));
}

TEST_CASE("aggregate norm of the extremal pair") {
    TrigPolynomial c(1);
    c.set_coeff(1, 1.0);
    c.set_coeff(-1, 1.0);  // 2 cos: |P+f| = |P-f| = 1 pointwise

    CHECK_THAT(aggregate_norm(c, {2.0, 2.0}, 4096), WithinAbs(std::sqrt(2.0), 1e-9));
    // s = 64 approximates the max-aggregate: (1 + 1)^{1/64} ~ 1.011.
    CHECK_THAT(aggregate_norm(c, {2.0, 64.0}, 4096), WithinAbs(1.0, 0.02));

    // Analytic f: aggregate equals the plain norm.
    TrigPolynomial a(2);
    a.set_coeff(0, {1.0, 0.5});
    a.set_coeff(1, {0.3, -0.2});
    a.set_coeff(2, {0.0, 0.7});
    CHECK_THAT(aggregate_norm(a, {3.0, 2.5}, 1024) - lp_norm(a, 3.0, 1024),
               WithinAbs(0.0, 1e-12));
}

TEST_CASE("s-aggregate is stable for extreme orders") {
    CHECK(s_aggregate(0.0, 0.0, 3.0) == 0.0);
    CHECK_THAT(s_aggregate(1e-200, 2e-200, 400.0), WithinAbs(2e-200, 1e-210));
    CHECK_THAT(s_aggregate(5.0, 5.0, 2.0), WithinAbs(5.0 * std::sqrt(2.0), 1e-12));
    CHECK(std::isfinite(s_aggregate(1e200, 1e199, 300.0)));
}
