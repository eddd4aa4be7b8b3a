#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "riesz/constants.hpp"
#include "riesz/dual.hpp"
#include "riesz/interval.hpp"

namespace riesz {

inline double sqr(double x) { return x * x; }

/// Gives pi and double-valued constants in any of the evaluation scalar
/// types (double, Interval, Dual of either).
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
    static double pi() { return std::numbers::pi; }
    static double from(double x) { return x; }
};

template <>
struct scalar_traits<Interval> {
    static Interval pi() { return pi_interval(); }
    static Interval from(double x) { return Interval(x); }
};

template <class T, int N>
struct scalar_traits<Dual<T, N>> {
    static Dual<T, N> pi() { return Dual<T, N>::constant(scalar_traits<T>::pi()); }
    static Dual<T, N> from(double x) { return Dual<T, N>::constant(scalar_traits<T>::from(x)); }
};

/// Constants appearing in the pointwise projection inequalities, evaluated
/// once per exponent p in the chosen scalar type.
template <class T>
struct ProjConstants {
    T inv_low_denom;   // 1 / (2 cos(pi/2p))^p
    T inv_high_denom;  // 1 / (2 sin(pi/2p))^p
    T tan_half;        // tan(pi/2p)
    T cot_half;        // cot(pi/2p)
};

template <class T>
ProjConstants<T> make_proj_constants(double p) {
    using std::cos;
    using std::pow;
    using std::sin;
    const T half = scalar_traits<T>::pi() / (2.0 * p);
    const T c = cos(half);
    const T s = sin(half);
    ProjConstants<T> k;
    k.inv_low_denom = scalar_traits<T>::from(1.0) / pow(c * 2.0, p);
    k.inv_high_denom = scalar_traits<T>::from(1.0) / pow(s * 2.0, p);
    k.tan_half = s / c;
    k.cot_half = c / s;
    return k;
}

/// Pointwise form behind the low-exponent lemma (proved for s=4, 1<p<=5/4
/// and s=2, 5/4<p<2), on 0 <= r <= 1, 0 <= t <= pi:
///   -((1+r^s)/2)^(p/s) + (1+r^2+2r cos t)^(p/2) / (2 cos(pi/2p))^p
///   - r^(p/2) tan(pi/2p) cos(tp/2).
template <class T>
T phi_low_expr(const T& r, const T& t, double p, double s, const ProjConstants<T>& k) {
    using std::cos;
    using std::pow;
    const T mean = (pow(r, s) + 1.0) * 0.5;
    const T quad = sqr(r) + r * cos(t) * 2.0 + 1.0;
    return pow(quad, 0.5 * p) * k.inv_low_denom - pow(mean, p / s) -
           pow(r, 0.5 * p) * k.tan_half * cos(t * (0.5 * p));
}

/// Pointwise form behind the high-exponent lemma (p >= 2), on 0 <= r <= 1 and
/// 0 <= t <= 2pi/p (p >= 4) resp. 0 <= t <= pi (2 <= p <= 4):
///   -((1+r^s)/2)^(p/s) + (1+r^2-2r cos t)^(p/2) / (2 sin(pi/2p))^p
///   + r^(p/2) cot(pi/2p) cos(tp/2).
template <class T>
T phi_high_expr(const T& r, const T& t, double p, double s, const ProjConstants<T>& k) {
    using std::cos;
    using std::pow;
    const T mean = (pow(r, s) + 1.0) * 0.5;
    const T quad = sqr(r) - r * cos(t) * 2.0 + 1.0;
    return pow(quad, 0.5 * p) * k.inv_high_denom - pow(mean, p / s) +
           pow(r, 0.5 * p) * k.cot_half * cos(t * (0.5 * p));
}

/// The t = 0 section of the high-exponent inequality:
///   -(1+r^p)/2 + (1-r)^p / (2 sin(pi/2p))^p + r^(p/2) cot(pi/2p).
template <class T>
T phi_t0_expr(const T& r, double p, const ProjConstants<T>& k) {
    using std::pow;
    return pow(1.0 - r, p) * k.inv_high_denom - (pow(r, p) + 1.0) * 0.5 +
           pow(r, 0.5 * p) * k.cot_half;
}

/// d/dp log h(p) for h(p) = (2 sin(pi/2p))^(-p):
///   (pi/2p) cot(pi/2p) - log(2 sin(pi/2p)).
/// Nonnegative on a p-interval iff h is nondecreasing there.
template <class T>
T claim51_expr(const T& p) {
    using std::cos;
    using std::log;
    using std::sin;
    const T half = scalar_traits<T>::pi() / (p * 2.0);
    const T s = sin(half);
    return half * (cos(half) / s) - log(s * 2.0);
}

/// Negated numerator of g'(r) for g(r) = (r^s - r^2)/(r - r^(s+1)):
///   (s-1)(r^s - r^(s+2)) + r^2 - r^(2s).
/// Nonnegative on [0,1] iff g is nonincreasing (the denominator square is
/// positive on (0,1)).
template <class T>
T auxg_expr(const T& r, double s) {
    using std::pow;
    return (pow(r, s) - pow(r, s + 2.0)) * (s - 1.0) + sqr(r) - pow(r, 2.0 * s);
}

// ---------------------------------------------------------------------------
// Validated double-precision entry points.

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace detail

inline double phi_low(double r, double t, const ExponentPair& e) {
    detail::require(r >= 0.0 && r <= 1.0, "phi_low: r must lie in [0, 1]");
    detail::require(t >= 0.0 && t <= std::numbers::pi, "phi_low: t must lie in [0, pi]");
    const auto k = make_proj_constants<double>(e.p);
    return phi_low_expr(r, t, e.p, e.s, k);
}

/// Upper end of the t-range of phi_high: 2pi/p for p >= 4, pi for 2 <= p < 4.
inline double phi_high_t_max(double p) {
    return p >= 4.0 ? 2.0 * std::numbers::pi / p : std::numbers::pi;
}

inline double phi_high(double r, double t, const ExponentPair& e) {
    detail::require(e.p >= 2.0, "phi_high: requires p >= 2");
    detail::require(r >= 0.0 && r <= 1.0, "phi_high: r must lie in [0, 1]");
    detail::require(t >= 0.0 && t <= phi_high_t_max(e.p) * (1.0 + 1e-15),
                    "phi_high: t outside the lemma's range");
    const auto k = make_proj_constants<double>(e.p);
    return phi_high_expr(r, t, e.p, e.s, k);
}

/// Piecewise angular weight of the high-exponent lemma, -pi <= t <= pi,
/// p >= 2.  For p >= 4 the three-branch form with the reflection rule
/// v_p(t) = v_p(pi - |t|) on pi/2 <= |t| <= pi; for 2 <= p < 4 simply
/// -cos(p(pi-|t|)/2).
inline double v_weight(double t, double p) {
    detail::require(p >= 2.0, "v_weight: requires p >= 2");
    detail::require(t >= -std::numbers::pi * (1.0 + 1e-15) && t <= std::numbers::pi * (1.0 + 1e-15),
                    "v_weight: t must lie in [-pi, pi]");
    const double pi = std::numbers::pi;
    double a = std::min(std::abs(t), pi);
    if (p < 4.0) return -std::cos(0.5 * p * (pi - a));
    if (a > 0.5 * pi) a = pi - a;  // reflection
    const double knee = 0.5 * pi - 2.0 * pi / p;
    if (a <= knee) {
        return std::max(std::abs(std::cos(0.5 * p * (0.5 * pi - a))),
                        std::abs(std::cos(0.5 * p * (0.5 * pi + a))));
    }
    return -std::cos(0.5 * p * (0.5 * pi - a));
}

inline double phi_t0(double r, double p) {
    detail::require(r >= 0.0 && r <= 1.0, "phi_t0: r must lie in [0, 1]");
    detail::require(p >= 2.0, "phi_t0: requires p >= 2");
    const auto k = make_proj_constants<double>(p);
    return phi_t0_expr(r, p, k);
}

/// h(p) = (2 sin(pi/2p))^(-p), increasing for p >= 2.
inline double h_claim(double p) {
    detail::require(p >= 2.0, "h_claim: requires p >= 2");
    return std::pow(2.0 * std::sin(std::numbers::pi / (2.0 * p)), -p);
}

/// g(r) = (r^s - r^2)/(r - r^(s+1)) for 0 < r < 1, s >= 2; the removable
/// singularity at r = 1 is patched by its limit -(s-2)/s within 1e-8 of 1.
inline double g_aux(double r, double s) {
    detail::require(s >= 2.0, "g_aux: requires s >= 2");
    detail::require(r > 0.0 && r <= 1.0, "g_aux: r must lie in (0, 1)");
    if (r >= 1.0 - 1e-8) return -(s - 2.0) / s;
    return (std::pow(r, s) - r * r) / (r - std::pow(r, s + 1.0));
}

/// The two power means of orders s <= s0 raised to p: the pair
/// (((a^s+b^s)/2)^(p/s), ((a^s0+b^s0)/2)^(p/s0)); first <= second always.
inline std::pair<double, double> power_mean_transfer(double a, double b, double s, double s0,
                                                     double p) {
    detail::require(a >= 0.0 && b >= 0.0, "power_mean_transfer: a, b must be nonnegative");
    detail::require(s > 0.0 && s <= s0, "power_mean_transfer: requires 0 < s <= s0");
    const double lhs = std::pow(0.5 * (std::pow(a, s) + std::pow(b, s)), p / s);
    const double rhs = std::pow(0.5 * (std::pow(a, s0) + std::pow(b, s0)), p / s0);
    return {lhs, rhs};
}

}  // namespace riesz
