#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "riesz/constants.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/probes.hpp"
#include "riesz/rng.hpp"
#include "riesz/trig_polynomial.hpp"

namespace riesz {

/// Outcome of one projection-norm-ratio experiment.  reference is the
/// closed-form constant of the exponent pair; margin = ratio / reference.
struct RatioReport {
    double p, s;
    std::optional<double> gamma;       // extremal-family parameter, if any
    std::optional<double> gamma_frac;  // gamma as a fraction of pi/(2p)
    std::optional<double> alpha, beta;
    std::size_t n;                     // quadrature size (power of two >= 64)
    double ratio;
    double reference;
    double margin;
    std::optional<std::uint64_t> seed;
};

namespace detail {

inline void check_quadrature_size(std::size_t n) {
    if (!is_pow2(n) || n < 64) {
        throw std::invalid_argument("quadrature size must be a power of two >= 64");
    }
}

}  // namespace detail

/// aggregate_norm(f) / lp_norm(f) with the sharp constant as reference.
inline RatioReport projection_ratio(const TrigPolynomial& f, const ExponentPair& e,
                                    std::size_t n) {
    detail::check_quadrature_size(n);
    if (f.is_zero()) throw std::invalid_argument("projection_ratio: zero polynomial");
    const double num = aggregate_norm(f, e, n);
    const double den = lp_norm(f, e.p, n);
    const double ref = sharp_constant(e).value;
    RatioReport r{e.p, e.s, std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                  n,   num / den, ref, (num / den) / ref, std::nullopt};
    return r;
}

/// Boundary samples of f_gamma = alpha Re g + i beta Im g for
/// g(z) = ((1+z)/(1-z))^(2 gamma / pi), whose boundary modulus is
/// |cot(theta/2)|^(2 gamma / pi) and boundary argument +-gamma (sign of
/// cot(theta/2)).  The half-offset grid keeps clear of the singular points
/// theta = 0 and pi.
inline std::vector<std::complex<double>> test_function_samples(double gamma, double alpha,
                                                               double beta, std::size_t n) {
    if (!(gamma > 0.0) || !(gamma < 0.5 * std::numbers::pi)) {
        throw std::invalid_argument("test_function_samples: gamma must lie in (0, pi/2)");
    }
    detail::check_quadrature_size(n);
    const double expo = 2.0 * gamma / std::numbers::pi;
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    std::vector<std::complex<double>> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double th = grid_theta(k, n);
        const double c = 1.0 / std::tan(0.5 * th);  // cot(theta/2)
        const double mod = std::pow(std::abs(c), expo);
        const double sign = c >= 0.0 ? 1.0 : -1.0;
        // g = mod * exp(+- i gamma); f = alpha Re g + i beta Im g.
        out[k] = {alpha * mod * cg, beta * sign * mod * sg};
    }
    return out;
}

/// Integrability threshold of the family: ||f_gamma||_p is finite only for
/// gamma < pi/(2p).
inline void validate_gamma(double gamma, double p) {
    validate_p(p);
    if (!(gamma > 0.0) || !(gamma < std::numbers::pi / (2.0 * p))) {
        throw std::invalid_argument(
            "gamma at or beyond the integrability threshold pi/(2p)");
    }
}

/// Projection-norm ratio of the extremal family at
/// gamma = gamma_frac * pi/(2p), evaluated from the closed boundary forms.
///
/// The projections are known exactly: with g = ((1+z)/(1-z))^(2 gamma/pi),
/// c = (alpha+beta)/2 and d = (alpha-beta)/2,
///   P+ f = c g + d,   P- f = d (conj(g) - 1),   |f| = m sqrt(a^2 cos^2 g + b^2 sin^2 g)
/// where m = |cot(theta/2)|^(2 gamma/pi).  The norm integrands carry the
/// power singularity theta^(-2 gamma p / pi) at theta = 0, whose mass a
/// uniform theta-grid resolves only logarithmically in the grid size; the
/// substitution cot(theta/2) = e^u (d theta = -du / cosh u) turns both norm
/// integrals into smooth exponentially-decaying line integrals that a
/// trapezoid rule nails at desk scale.  n scales the u-resolution.
inline RatioReport extremal_ratio(const ExponentPair& e, double gamma_frac, double alpha,
                                  double beta, std::size_t n) {
    if (!(gamma_frac > 0.0) || !(gamma_frac < 1.0)) {
        throw std::invalid_argument("extremal_ratio: gamma fraction must lie in (0, 1)");
    }
    if (alpha == 0.0 && beta == 0.0) {
        throw std::invalid_argument("extremal_ratio: (alpha, beta) must not be the zero vector");
    }
    detail::check_quadrature_size(n);
    const double gamma = gamma_frac * std::numbers::pi / (2.0 * e.p);
    validate_gamma(gamma, e.p);

    const double expo = 2.0 * gamma / std::numbers::pi;
    const double frac = expo * e.p;  // singularity strength of |f|^p, < 1
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    // The ratio is homogeneous in (alpha, beta); normalizing keeps the
    // p-th powers below overflow for any input scale.
    const double ab_scale = std::max(std::abs(alpha), std::abs(beta));
    const double an = alpha / ab_scale, bn = beta / ab_scale;
    const double c = 0.5 * (an + bn), d = 0.5 * (an - bn);
    const double f_scale = std::sqrt(an * an * cg * cg + bn * bn * sg * sg);

    // Decay rates of the integrands in u; truncate when e^{-rate |u|} < 1e-18.
    const double u_pos = 42.0 / (1.0 - frac) + 42.0;
    const double u_neg = 42.0 / (1.0 + frac) + 42.0;
    const double h = std::min(0.01, (u_pos + u_neg) / static_cast<double>(std::max<std::size_t>(n, 4096)));
    const std::size_t steps = static_cast<std::size_t>((u_pos + u_neg) / h) + 1;

    // Both integrands scale like m^p; dividing it out keeps every factor in
    // range (m^p alone overflows for fractions near 1).  The common weight
    // m^p / cosh(u) = exp(frac u - log cosh u) never exceeds 2.
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k <= steps; ++k) {
        const double u = -u_neg + h * static_cast<double>(k);
        const double inv_m = std::exp(-expo * u);
        const double log_cosh = std::abs(u) + std::log1p(std::exp(-2.0 * std::abs(u))) -
                                std::numbers::ln2;
        const double w = std::exp(frac * u - log_cosh);
        const double plus = std::sqrt(c * c + 2.0 * c * d * cg * inv_m + d * d * inv_m * inv_m);
        const double minus = std::abs(d) * std::sqrt(1.0 - 2.0 * cg * inv_m + inv_m * inv_m);
        num += w * std::pow(s_aggregate(plus, minus, e.s), e.p);
        den += w;
    }
    const double ratio = std::pow(num / den, 1.0 / e.p) / f_scale;

    RatioReport r{e.p,   e.s,  gamma, gamma_frac, alpha, beta, n, ratio,
                  sharp_constant(e).value, 0.0, std::nullopt};
    r.margin = ratio / r.reference;
    return r;
}

/// For each gamma fraction, the best ratio over an (alpha, beta) grid.  The
/// returned sequence is expected to increase toward the sharp constant and
/// never to exceed it.
inline std::vector<RatioReport> extremal_sweep(const ExponentPair& e,
                                               std::span<const double> gamma_fractions,
                                               std::span<const std::pair<double, double>> ab_grid,
                                               std::size_t n) {
    if (ab_grid.empty()) throw std::invalid_argument("extremal_sweep: empty (alpha,beta) grid");
    std::vector<RatioReport> rows;
    rows.reserve(gamma_fractions.size());
    for (double frac : gamma_fractions) {
        std::optional<RatioReport> best;
        for (const auto& [a, b] : ab_grid) {
            RatioReport r = extremal_ratio(e, frac, a, b, n);
            if (!best || r.ratio > best->ratio) best = r;
        }
        rows.push_back(*best);
    }
    return rows;
}

/// Default (alpha, beta) grid for sweeps: the two pure axes plus mixtures.
/// Ratios are homogeneous, so no normalization is needed.
inline std::vector<std::pair<double, double>> default_ab_grid() {
    return {{1.0, 0.0}, {1.0, 0.25}, {1.0, 0.5}, {1.0, 1.0}, {0.5, 1.0}, {0.25, 1.0}, {0.0, 1.0}};
}

struct SearchResult {
    RatioReport best;
    TrigPolynomial witness;
};

/// Draws `trials` random trig polynomials with iid standard complex Gaussian
/// coefficients (portable generator, see rng.hpp) and returns the largest
/// projection ratio with the polynomial that attained it.
inline SearchResult random_ratio_search(const ExponentPair& e, int trials, int degree,
                                        std::uint64_t seed, std::size_t n = 512) {
    if (trials < 1) throw std::invalid_argument("random_ratio_search: trials must be >= 1");
    if (degree < 1) throw std::invalid_argument("random_ratio_search: degree must be >= 1");
    detail::check_quadrature_size(n);
    if (n < 2 * static_cast<std::size_t>(degree) + 1) {
        throw std::invalid_argument("random_ratio_search: n too small for the degree");
    }
    GaussianSource rng(seed);
    std::optional<RatioReport> best;
    TrigPolynomial witness(degree);
    for (int trial = 0; trial < trials; ++trial) {
        TrigPolynomial f(degree);
        for (int k = -degree; k <= degree; ++k) f.set_coeff(k, rng.next_complex());
        RatioReport r = projection_ratio(f, e, n);
        if (!best || r.ratio > best->ratio) {
            best = r;
            witness = f;
        }
    }
    best->seed = seed;
    return {*best, witness};
}

/// ||u + i Hu||_p / ||u||_p for a real trig polynomial u; bounded by the
/// Riesz-inequality constant.
inline double conjugate_ratio(const TrigPolynomial& u, double p, std::size_t n) {
    validate_p(p);
    detail::check_quadrature_size(n);
    if (u.is_zero()) throw std::invalid_argument("conjugate_ratio: zero polynomial");
    if (u.real_symmetry_defect() > 1e-9) {
        throw std::invalid_argument("conjugate_ratio: input polynomial is not real-valued");
    }
    const TrigPolynomial v = conjugate_function(u);
    TrigPolynomial analytic(u.degree());
    for (int k = -u.degree(); k <= u.degree(); ++k) {
        analytic.set_coeff(k, u.coeff(k) + std::complex<double>{0.0, 1.0} * v.coeff(k));
    }
    return lp_norm(analytic, p, n) / lp_norm(u, p, n);
}

struct ConjugateSearchResult {
    double max_ratio;
    double reference;  // verbitsky_constant(p)
    int trials;
    std::uint64_t seed;
};

/// Random real polynomials (Gaussian coefficients symmetrized) probing the
/// sharp Riesz inequality.
inline ConjugateSearchResult conjugate_ratio_search(double p, int trials, int degree,
                                                    std::uint64_t seed, std::size_t n = 512) {
    if (trials < 1 || degree < 1) {
        throw std::invalid_argument("conjugate_ratio_search: trials and degree must be >= 1");
    }
    GaussianSource rng(seed);
    double best = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        TrigPolynomial u(degree);
        u.set_coeff(0, rng.next());
        for (int k = 1; k <= degree; ++k) {
            const auto c = rng.next_complex();
            u.set_coeff(k, c);
            u.set_coeff(-k, std::conj(c));
        }
        best = std::max(best, conjugate_ratio(u, p, n));
    }
    return {best, verbitsky_constant(p), trials, seed};
}

struct MinorantResult {
    double mean;
    int boundary_hits;  // samples that landed on the branch-cut ray arg = pi
};

/// Quadrature mean of the subharmonic minorant applied to the projection
/// product: Re w^(p/2) on the principal branch for 1 < p < 2, and
/// |w|^(p/2) v_p(arg w - pi/2) for p >= 2, where w = P+f * conj(P-f).
/// The integration step of the sharp-constant proofs predicts a nonnegative
/// mean: w is the boundary value of a product of two analytic functions
/// vanishing at the origin, so the subharmonic composition has mean >= 0.
/// (The proofs' "P+f P-f" denotes the lemma's z w with w-bar = P-f, hence
/// the conjugation here; without it the mean is not nonnegative.)
inline MinorantResult minorant_mean_check(const TrigPolynomial& f, double p, std::size_t n) {
    validate_p(p);
    detail::check_quadrature_size(n);
    const auto plus = synthesize(project_plus(f), n);
    const auto minus = synthesize(project_minus(f), n);
    std::vector<double> vals(n);
    int hits = 0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::complex<double> w = plus[k] * std::conj(minus[k]);
        if (p < 2.0) {
            if (w.real() < 0.0 && w.imag() == 0.0) ++hits;  // on the cut; principal limit
            vals[k] = w == std::complex<double>{} ? 0.0 : std::pow(w, 0.5 * p).real();
        } else {
            vals[k] = phi_subharmonic(w, p);
        }
    }
    const double mean = detail::pairwise_sum(vals) / static_cast<double>(n);
    return {mean, hits};
}

}  // namespace riesz
