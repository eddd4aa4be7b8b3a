#pragma once

#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "riesz/constants.hpp"
#include "riesz/fft.hpp"

namespace riesz {

/// Sample grid used throughout: the half-offset uniform grid
/// theta_k = 2 pi (k + 1/2) / n, which never touches theta = 0 or pi where
/// the extremal test family is singular.
inline double grid_theta(std::size_t k, std::size_t n) {
    return 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
}

/// Finitely supported two-sided Fourier series: coefficients c(n) for
/// |n| <= degree, evaluating to sum c(n) e^{i n theta} on the circle.
class TrigPolynomial {
  public:
    explicit TrigPolynomial(int degree) : degree_(degree), c_(2 * degree + 1) {
        if (degree < 0) throw std::invalid_argument("TrigPolynomial: degree must be >= 0");
    }

    int degree() const { return degree_; }

    std::complex<double> coeff(int n) const {
        return std::abs(n) > degree_ ? std::complex<double>{} : c_[n + degree_];
    }

    void set_coeff(int n, std::complex<double> v) {
        if (std::abs(n) > degree_) {
            throw std::out_of_range("TrigPolynomial: frequency outside degree");
        }
        c_[n + degree_] = v;
    }

    std::complex<double> eval(double theta) const {
        // Horner in e^{i theta} over e^{-i degree theta} * sum.
        const std::complex<double> w = std::polar(1.0, theta);
        std::complex<double> acc{};
        for (int i = 2 * degree_; i >= 0; --i) acc = acc * w + c_[i];
        return acc * std::polar(1.0, -degree_ * theta);
    }

    bool is_zero() const {
        for (const auto& v : c_) {
            if (v != std::complex<double>{}) return false;
        }
        return true;
    }

    double real_symmetry_defect() const {
        double defect = std::abs(coeff(0).imag());
        for (int n = 1; n <= degree_; ++n) {
            defect = std::max(defect, std::abs(coeff(n) - std::conj(coeff(-n))));
        }
        return defect;
    }

  private:
    int degree_;
    std::vector<std::complex<double>> c_;  // index n + degree_
};

namespace detail {

// Frequency n folded into [0, m) as a DFT bin index.
inline std::size_t dft_bin(int n, std::size_t m) {
    const int r = n % static_cast<int>(m);
    return static_cast<std::size_t>(r < 0 ? r + static_cast<int>(m) : r);
}

}  // namespace detail

/// Discrete Fourier analysis on the half-offset grid:
/// c(n) = (1/m) sum_k f_k e^{-i n theta_k} for |n| <= degree.
/// Exact for trigonometric polynomials of degree <= (m-1)/2.
inline TrigPolynomial analyze(std::span<const std::complex<double>> samples, int degree) {
    const std::size_t m = samples.size();
    if (m < 2 * static_cast<std::size_t>(degree) + 1) {
        throw std::invalid_argument("analyze: need at least 2*degree+1 samples");
    }
    TrigPolynomial f(degree);
    if (is_pow2(m)) {
        std::vector<std::complex<double>> a(samples.begin(), samples.end());
        fft_radix2(a, false);
        for (int n = -degree; n <= degree; ++n) {
            const auto phase = std::polar(1.0, -std::numbers::pi * n / static_cast<double>(m));
            f.set_coeff(n, phase * a[detail::dft_bin(n, m)] / static_cast<double>(m));
        }
        return f;
    }
    for (int n = -degree; n <= degree; ++n) {
        std::complex<double> acc{};
        for (std::size_t k = 0; k < m; ++k) {
            acc += samples[k] * std::polar(1.0, -n * grid_theta(k, m));
        }
        f.set_coeff(n, acc / static_cast<double>(m));
    }
    return f;
}

/// Values of f on the half-offset grid of the given size; requires
/// n_samples >= 2*degree+1 so synthesis is alias-free.
inline std::vector<std::complex<double>> synthesize(const TrigPolynomial& f,
                                                    std::size_t n_samples) {
    const int deg = f.degree();
    if (n_samples < 2 * static_cast<std::size_t>(deg) + 1) {
        throw std::invalid_argument("synthesize: need at least 2*degree+1 samples");
    }
    if (is_pow2(n_samples)) {
        std::vector<std::complex<double>> spec(n_samples);
        for (int n = -deg; n <= deg; ++n) {
            spec[detail::dft_bin(n, n_samples)] +=
                f.coeff(n) * std::polar(1.0, std::numbers::pi * n / static_cast<double>(n_samples));
        }
        fft_radix2(spec, true);
        return spec;
    }
    std::vector<std::complex<double>> out(n_samples);
    for (std::size_t k = 0; k < n_samples; ++k) out[k] = f.eval(grid_theta(k, n_samples));
    return out;
}

/// Keeps the nonnegative frequencies (the analytic projection).
inline TrigPolynomial project_plus(const TrigPolynomial& f) {
    TrigPolynomial g(f.degree());
    for (int n = 0; n <= f.degree(); ++n) g.set_coeff(n, f.coeff(n));
    return g;
}

/// Keeps the strictly negative frequencies (the co-analytic projection).
inline TrigPolynomial project_minus(const TrigPolynomial& f) {
    TrigPolynomial g(f.degree());
    for (int n = -f.degree(); n < 0; ++n) g.set_coeff(n, f.coeff(n));
    return g;
}

/// Conjugation multiplier -i sgn(n).  Real input with real mean stays real
/// and loses its mean (the V(0) = 0 normalization).
inline TrigPolynomial conjugate_function(const TrigPolynomial& f) {
    TrigPolynomial g(f.degree());
    const std::complex<double> mi{0.0, -1.0};
    for (int n = 1; n <= f.degree(); ++n) {
        g.set_coeff(n, mi * f.coeff(n));
        g.set_coeff(-n, -mi * f.coeff(-n));
    }
    return g;
}

namespace detail {

// Pairwise summation: deterministic for a fixed length and accurate to
// O(log n) ulps, which the 1e-10 ratio tolerances rely on.
inline double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v) s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

}  // namespace detail

/// Discrete L^p mean norm of samples: (mean |f_k|^p)^(1/p).
inline double lp_norm(std::span<const std::complex<double>> samples, double p) {
    if (!(p > 0.0)) throw std::invalid_argument("lp_norm: p must be positive");
    if (samples.empty()) throw std::invalid_argument("lp_norm: no samples");
    std::vector<double> powers(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k) powers[k] = std::pow(std::abs(samples[k]), p);
    const double mean = detail::pairwise_sum(powers) / static_cast<double>(samples.size());
    return std::pow(mean, 1.0 / p);
}

/// L^p norm of a trig polynomial by quadrature on the half-offset grid of n
/// points (n a power of two).
inline double lp_norm(const TrigPolynomial& f, double p, std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("lp_norm: n must be a power of two");
    const auto samples = synthesize(f, n);
    return lp_norm(samples, p);
}

/// Doubles the grid until two successive quadratures of |f|^p agree to
/// rel_tol; returns the finer value.
inline double lp_norm_converged(const TrigPolynomial& f, double p, std::size_t n0,
                                double rel_tol = 1e-8, std::size_t n_cap = std::size_t{1} << 22) {
    if (!is_pow2(n0)) throw std::invalid_argument("lp_norm_converged: n0 must be a power of two");
    const std::size_t n_min = std::bit_ceil(2 * static_cast<std::size_t>(f.degree()) + 2);
    std::size_t n = std::max<std::size_t>(n0, n_min);
    double prev = lp_norm(f, p, n);
    while (n < n_cap) {
        n *= 2;
        const double cur = lp_norm(f, p, n);
        if (std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

/// Pointwise s-aggregate of |a| and |b|, computed stably through the larger
/// modulus so huge s neither overflows nor underflows.
inline double s_aggregate(double a, double b, double s) {
    const double hi = std::max(a, b), lo = std::min(a, b);
    if (hi == 0.0) return 0.0;
    return hi * std::pow(1.0 + std::pow(lo / hi, s), 1.0 / s);
}

/// ||(|P+f|^s + |P-f|^s)^(1/s)||_p by quadrature on n points.
inline double aggregate_norm(const TrigPolynomial& f, const ExponentPair& e, std::size_t n) {
    if (!is_pow2(n)) throw std::invalid_argument("aggregate_norm: n must be a power of two");
    const auto plus = synthesize(project_plus(f), n);
    const auto minus = synthesize(project_minus(f), n);
    std::vector<double> powers(n);
    for (std::size_t k = 0; k < n; ++k) {
        powers[k] = std::pow(s_aggregate(std::abs(plus[k]), std::abs(minus[k]), e.s), e.p);
    }
    const double mean = detail::pairwise_sum(powers) / static_cast<double>(n);
    return std::pow(mean, 1.0 / e.p);
}

}  // namespace riesz
