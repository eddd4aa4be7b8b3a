#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "riesz/constants.hpp"

namespace riesz {

/// Which sign of the denominator 1 + t^2 +- 2t cos(pi/p) a value refers to.
enum class SignBranch { PlusCos, MinusCos };

/// Where the supremum over t in [0,1] is attained: at the endpoint t = 1
/// (closed-form case) or at the interior zero of the derivative sign
/// function.
enum class SupBranch { BoundaryT1, InteriorRoot };

inline std::string_view to_string(SignBranch b) {
    return b == SignBranch::PlusCos ? "PlusCos" : "MinusCos";
}

inline std::string_view to_string(SupBranch b) {
    return b == SupBranch::BoundaryT1 ? "BoundaryT1" : "InteriorRoot";
}

/// Ratio attained by the two-parameter extremal family:
/// (|a+b|^s + |a-b|^s)^(1/s) / (2 sqrt(a^2 cos^2(pi/2p) + b^2 sin^2(pi/2p))).
/// Homogeneous of degree zero; rejects the zero vector.
inline double ratio_T(double alpha, double beta, const ExponentPair& e) {
    if (alpha == 0.0 && beta == 0.0) {
        throw std::invalid_argument("ratio_T: (alpha, beta) must not be the zero vector");
    }
    const double half = std::numbers::pi / (2.0 * e.p);
    const double c = std::cos(half), sn = std::sin(half);
    const double num = std::pow(std::abs(alpha + beta), e.s) + std::pow(std::abs(alpha - beta), e.s);
    const double den = 2.0 * std::sqrt(alpha * alpha * c * c + beta * beta * sn * sn);
    return std::pow(num, 1.0 / e.s) / den;
}

/// One-variable reduction of ratio_T:
/// (1 + t^s)^(1/s) / sqrt(1 + t^2 +- 2t cos(pi/p)) for t in [0,1].
inline double profile_rho(double t, const ExponentPair& e, SignBranch sign) {
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw std::invalid_argument("profile_rho: t must lie in [0, 1]");
    }
    const double c = std::cos(std::numbers::pi / e.p);
    const double signed_c = sign == SignBranch::PlusCos ? c : -c;
    const double num = std::pow(1.0 + std::pow(t, e.s), 1.0 / e.s);
    return num / std::sqrt(1.0 + t * t + 2.0 * t * signed_c);
}

/// Sign function of the profile derivative:
/// Phi(t) = t^(s-1) - t + cos(pi/p) (t^s - 1).  Phi(1) = 0 always.
inline double sign_phi(double t, const ExponentPair& e) {
    if (!(t >= 0.0) || !(t <= 1.0)) {
        throw std::invalid_argument("sign_phi: t must lie in [0, 1]");
    }
    const double c = std::cos(std::numbers::pi / e.p);
    return std::pow(t, e.s - 1.0) - t + c * (std::pow(t, e.s) - 1.0);
}

/// Interior zero t~ of Phi on (0,1), present exactly when
/// s cos(pi/p) + s - 2 > 0 (then the profile peaks at t~ instead of t = 1).
/// Requires 1 < p < 2; for p > 2 callers map to the dual exponent first.
/// Plain bisection on [1e-12, 1 - 1e-12] to absolute tolerance 1e-12.
inline std::optional<double> critical_t(const ExponentPair& e) {
    if (!(e.p < 2.0)) {
        throw std::invalid_argument("critical_t: requires 1 < p < 2 (use the dual exponent)");
    }
    const double c = std::cos(std::numbers::pi / e.p);
    if (e.s * c + e.s - 2.0 <= 0.0) return std::nullopt;  // profile increasing, max at t = 1

    double lo = 1e-12, hi = 1.0 - 1e-12;
    double flo = sign_phi(lo, e), fhi = sign_phi(hi, e);
    if (!(flo > 0.0) || !(fhi < 0.0)) {
        throw std::runtime_error("critical_t: no sign change bracketed (internal inconsistency)");
    }
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = sign_phi(mid, e);
        if (fm > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct LowerBoundResult {
    double value;      // sup over t of the dominating profile branch, >= 1
    double arg_t;      // maximizing t in [0, 1]
    SupBranch branch;
    SignBranch sign_branch;
};

namespace detail {

// Golden-section maximization on [a, b]; fixed iteration count keeps the
// result independent of any tolerance test ordering.
template <class F>
inline std::pair<double, double> golden_max(F&& f, double a, double b) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 100; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return f1 > f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

}  // namespace detail

/// Supremum over t in [0,1] and both sign branches of profile_rho.
/// For p < 2 the PlusCos branch dominates; p > 2 is handled through the dual
/// exponent p' = p/(p-1) (cos(pi/p) = -cos(pi/p')), which makes the MinusCos
/// branch the dominant one with the identical one-variable analysis.
/// A coarse scan plus golden-section refinement guards the derivative-based
/// case split, so the reported value is a true maximum over every point
/// ever evaluated.
inline LowerBoundResult lower_bound(const ExponentPair& e, int scan_points = 10000) {
    if (scan_points < 3) throw std::invalid_argument("lower_bound: need at least 3 scan points");
    const double pd = e.p <= 2.0 ? e.p : e.dual_p();
    const SignBranch sb = e.p <= 2.0 ? SignBranch::PlusCos : SignBranch::MinusCos;
    const auto rho = [&](double t) { return profile_rho(t, e, sb); };

    // Coarse scan over [0, 1].
    int best_i = 0;
    double best_v = rho(0.0);
    for (int i = 1; i < scan_points; ++i) {
        const double t = static_cast<double>(i) / (scan_points - 1);
        const double v = rho(t);
        if (v > best_v) {
            best_v = v;
            best_i = i;
        }
    }
    const double h = 1.0 / (scan_points - 1);
    const double win_lo = std::max(0.0, best_i * h - h);
    const double win_hi = std::min(1.0, best_i * h + h);
    auto [scan_t, scan_v] = detail::golden_max(rho, win_lo, win_hi);
    if (best_v > scan_v) {
        scan_t = best_i * h;
        scan_v = best_v;
    }

    const double c = std::cos(std::numbers::pi / pd);
    const double cond = e.s * c + e.s - 2.0;

    double value, arg;
    SupBranch branch;
    if (cond <= 0.0) {
        branch = SupBranch::BoundaryT1;
        arg = 1.0;
        value = rho(1.0);
    } else if (pd < 2.0 - 1e-12) {
        branch = SupBranch::InteriorRoot;
        arg = *critical_t(ExponentPair(pd, e.s));
        value = rho(arg);
    } else {
        // p = 2 degenerate: cos(pi/p) ~ 0 and the interior root collapses to
        // t = 0; the scan already sits on the maximum.
        branch = SupBranch::InteriorRoot;
        arg = scan_t;
        value = scan_v;
    }
    if (scan_v > value) {
        value = scan_v;
        arg = scan_t;
    }
    return {value, arg, branch, sb};
}

struct AsymptoticRow {
    double s;
    double lower_bound;
    double limit;  // hv_max_constant(p)
};

/// Lower-bound values along an s-sequence together with the s -> inf limit
/// 1/sin(pi/p) they converge to.
inline std::vector<AsymptoticRow> asymptotic_sweep(double p, std::span<const double> s_values) {
    validate_p(p);
    const double limit = hv_max_constant(p);
    std::vector<AsymptoticRow> rows;
    rows.reserve(s_values.size());
    for (double s : s_values) {
        validate_s(s);
        rows.push_back({s, lower_bound(ExponentPair(p, s)).value, limit});
    }
    return rows;
}

}  // namespace riesz
