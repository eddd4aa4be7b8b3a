#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace riesz {

/// Moves a finite double by `ulps` representable steps (negative = down).
/// Uses the sign-magnitude to ordered-integer mapping, so stepping across
/// zero behaves like nextafter applied |ulps| times.  Infinities saturate.
inline double nudge(double x, int ulps) {
    if (std::isnan(x) || std::isinf(x)) return x;
    const auto u = std::bit_cast<std::uint64_t>(x);
    std::int64_t key = (u >> 63) ? -static_cast<std::int64_t>(u & 0x7fffffffffffffffULL)
                                 : static_cast<std::int64_t>(u);
    key += ulps;
    constexpr std::int64_t inf_key = 0x7ff0000000000000LL;
    if (key >= inf_key) return std::numeric_limits<double>::infinity();
    if (key <= -inf_key) return -std::numeric_limits<double>::infinity();
    const std::uint64_t v = key < 0 ? (0x8000000000000000ULL | static_cast<std::uint64_t>(-key))
                                    : static_cast<std::uint64_t>(key);
    return std::bit_cast<double>(v);
}

/// Closed interval [lo, hi] with outward-rounded arithmetic.  Soundness
/// mechanism: after every operation each endpoint is widened by 4 ulps,
/// which absorbs the rounding of the double computation and the (< 2 ulp)
/// error of the libm functions involved.  No rounding-mode control is used.
class Interval {
  public:
    Interval() : lo_(0.0), hi_(0.0) {}
    explicit Interval(double v) : lo_(v), hi_(v) { check(); }
    Interval(double lo, double hi) : lo_(lo), hi_(hi) { check(); }

    static Interval entire() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double mid() const {
        if (std::isinf(lo_) || std::isinf(hi_)) return 0.0;
        return 0.5 * (lo_ + hi_);
    }
    double width() const { return hi_ - lo_; }
    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool is_finite() const { return std::isfinite(lo_) && std::isfinite(hi_); }

    Interval widened() const { return raw(nudge(lo_, -4), nudge(hi_, +4)); }

    // Raw constructor without the lo <= hi check (internal; endpoints may be
    // +-inf after saturation).
    static Interval raw(double lo, double hi) {
        Interval r;
        r.lo_ = lo;
        r.hi_ = hi;
        return r;
    }

  private:
    void check() const {
        if (std::isnan(lo_) || std::isnan(hi_) || lo_ > hi_) {
            throw std::invalid_argument("Interval: endpoints must satisfy lo <= hi");
        }
    }

    double lo_, hi_;
};

inline Interval operator-(const Interval& a) { return Interval::raw(-a.hi(), -a.lo()); }

inline Interval operator+(const Interval& a, const Interval& b) {
    return Interval::raw(a.lo() + b.lo(), a.hi() + b.hi()).widened();
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return Interval::raw(a.lo() - b.hi(), a.hi() - b.lo()).widened();
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    double lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (std::isnan(c[i])) return Interval::entire();  // inf * 0
        lo = std::min(lo, c[i]);
        hi = std::max(hi, c[i]);
    }
    if (std::isnan(lo) || std::isnan(hi)) return Interval::entire();
    return Interval::raw(lo, hi).widened();
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo() <= 0.0 && b.hi() >= 0.0) return Interval::entire();
    const double c[4] = {a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi()};
    double lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (std::isnan(c[i])) return Interval::entire();
        lo = std::min(lo, c[i]);
        hi = std::max(hi, c[i]);
    }
    return Interval::raw(lo, hi).widened();
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval sqr(const Interval& a) {
    const double l = std::abs(a.lo()), h = std::abs(a.hi());
    double lo = a.contains(0.0) ? 0.0 : std::min(l, h);
    double hi = std::max(l, h);
    return Interval::raw(lo * lo, hi * hi).widened();
}

inline Interval sqrt(const Interval& a) {
    const double lo = std::max(a.lo(), 0.0);
    const double hi = std::max(a.hi(), 0.0);
    return Interval::raw(std::sqrt(lo), std::sqrt(hi)).widened();
}

/// Real-exponent power on a nonnegative base, evaluated endpoint-wise by
/// monotonicity.  The base is intersected with [0, inf) first: every certified
/// expression keeps its bases mathematically nonnegative, and small negative
/// lower endpoints only arise from interval overestimation.
inline Interval pow(const Interval& x, double a) {
    if (a == 0.0) return Interval(1.0);
    const double blo = std::max(x.lo(), 0.0);
    const double bhi = std::max(x.hi(), 0.0);
    double plo = std::pow(blo, a), phi = std::pow(bhi, a);
    if (a < 0.0) std::swap(plo, phi);
    if (std::isnan(plo) || std::isnan(phi)) return Interval::entire();
    return Interval::raw(plo, phi).widened();
}

inline Interval log(const Interval& x) {
    const double lo = x.lo() <= 0.0 ? -std::numeric_limits<double>::infinity() : std::log(x.lo());
    const double hi = x.hi() <= 0.0 ? -std::numeric_limits<double>::infinity() : std::log(x.hi());
    return Interval::raw(lo, hi).widened();
}

namespace detail {

// Does [lo, hi] contain a point congruent to `offset` mod 2*pi?  The check is
// slightly over-inclusive (1e-9 slack) so that double-pi ambiguity can only
// widen the resulting bound, never shrink it.
inline bool contains_mod_2pi(double lo, double hi, double offset) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double kmin = std::ceil((lo - offset) / two_pi - 1e-9);
    const double kmax = std::floor((hi - offset) / two_pi + 1e-9);
    return kmin <= kmax;
}

}  // namespace detail

inline Interval cos(const Interval& x) {
    if (!x.is_finite() || x.width() >= 2.0 * std::numbers::pi) return Interval(-1.0, 1.0);
    const double c1 = std::cos(x.lo()), c2 = std::cos(x.hi());
    double lo = std::min(c1, c2), hi = std::max(c1, c2);
    if (detail::contains_mod_2pi(x.lo(), x.hi(), 0.0)) hi = 1.0;
    if (detail::contains_mod_2pi(x.lo(), x.hi(), std::numbers::pi)) lo = -1.0;
    lo = std::max(nudge(lo, -4), -1.0);
    hi = std::min(nudge(hi, +4), 1.0);
    return Interval::raw(lo, hi);
}

inline Interval sin(const Interval& x) {
    if (!x.is_finite() || x.width() >= 2.0 * std::numbers::pi) return Interval(-1.0, 1.0);
    const double s1 = std::sin(x.lo()), s2 = std::sin(x.hi());
    double lo = std::min(s1, s2), hi = std::max(s1, s2);
    if (detail::contains_mod_2pi(x.lo(), x.hi(), 0.5 * std::numbers::pi)) hi = 1.0;
    if (detail::contains_mod_2pi(x.lo(), x.hi(), -0.5 * std::numbers::pi)) lo = -1.0;
    lo = std::max(nudge(lo, -4), -1.0);
    hi = std::min(nudge(hi, +4), 1.0);
    return Interval::raw(lo, hi);
}

inline Interval tan(const Interval& x) { return sin(x) / cos(x); }

/// Enclosure of pi.
inline Interval pi_interval() {
    return Interval::raw(nudge(std::numbers::pi, -1), nudge(std::numbers::pi, +1));
}

}  // namespace riesz
