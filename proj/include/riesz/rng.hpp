#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace riesz {

/// Reproducible Gaussian stream: std::mt19937_64 (bit-exact by the standard)
/// feeding Box-Muller on 53-bit uniforms in (0,1).  Distribution classes from
/// <random> are deliberately avoided because their output is
/// implementation-defined.
class GaussianSource {
  public:
    explicit GaussianSource(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in (0,1), 53 significant bits, never exactly 0 or 1.
    double next_uniform() {
        return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal N(0,1).
    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        const double m = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = m * std::sin(a);
        have_spare_ = true;
        return m * std::cos(a);
    }

    /// Complex with independent N(0,1) real and imaginary parts.
    std::complex<double> next_complex() {
        const double re = next();
        const double im = next();
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace riesz
