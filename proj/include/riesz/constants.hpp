#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace riesz {

inline constexpr double kMinP = 1.0 + 1e-9;
inline constexpr double kMaxP = 1e6;

inline void validate_p(double p) {
    if (!(p > kMinP) || !(p < kMaxP)) {
        throw std::invalid_argument("exponent p must lie in (1+1e-9, 1e6), got " +
                                    std::to_string(p));
    }
}

inline void validate_s(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("aggregation order s must be positive and finite, got " +
                                    std::to_string(s));
    }
}

/// Exponent pair (p, s) of the joint projection estimate
/// ||(|P+f|^s + |P-f|^s)^(1/s)||_p <= C ||f||_p.
/// The constructor enforces 1 < p < inf and 0 < s < inf; p is additionally
/// kept away from 1 and capped so pi/(2p) trigonometry stays well scaled.
struct ExponentPair {
    double p;
    double s;

    ExponentPair(double p_, double s_) : p(p_), s(s_) {
        validate_p(p);
        validate_s(s);
    }

    /// Dual Lebesgue exponent p/(p-1).
    double dual_p() const { return p / (p - 1.0); }
};

/// Parameter regimes of the sharp-constant theorem.  The first three are the
/// proved ranges; everything else only carries the conjectured closed form as
/// a lower bound.
enum class Regime {
    ProvedLowA,      // 1 < p <= 5/4 and 0 < s <= 4
    ProvedLowB,      // 5/4 < p < 2 and 0 < s <= 2
    ProvedHigh,      // p >= 2 and 0 < s <= p
    LowerBoundOnly,  // none of the above
};

inline std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::ProvedLowA: return "ProvedLowA";
        case Regime::ProvedLowB: return "ProvedLowB";
        case Regime::ProvedHigh: return "ProvedHigh";
        case Regime::LowerBoundOnly: return "LowerBoundOnly";
    }
    return "?";
}

/// The defining condition attached to each regime tag.
inline std::string_view regime_condition(Regime r) {
    switch (r) {
        case Regime::ProvedLowA: return "1 < p <= 5/4 && 0 < s <= 4";
        case Regime::ProvedLowB: return "5/4 < p < 2 && 0 < s <= 2";
        case Regime::ProvedHigh: return "p >= 2 && 0 < s <= p";
        case Regime::LowerBoundOnly: return "no proved branch applies";
    }
    return "?";
}

inline Regime classify(const ExponentPair& e) {
    if (e.p <= 1.25 && e.s <= 4.0) return Regime::ProvedLowA;
    if (e.p > 1.25 && e.p < 2.0 && e.s <= 2.0) return Regime::ProvedLowB;
    if (e.p >= 2.0 && e.s <= e.p) return Regime::ProvedHigh;
    return Regime::LowerBoundOnly;
}

struct SharpConstant {
    double value;
    Regime regime;
};

/// The closed form 2^(1/s) / (2 cos(pi/2p)) for p < 2 and
/// 2^(1/s) / (2 sin(pi/2p)) for p >= 2.  Outside the proved regimes the
/// matching-side formula is still returned, tagged LowerBoundOnly: it is a
/// valid lower bound there, and the tag prevents silent misuse as a norm.
/// Constants are evaluated in extended precision and rounded once, so values
/// that are exact in binary64 (such as C(2,2) = 1) come out exact.
inline SharpConstant sharp_constant(const ExponentPair& e) {
    const long double half = std::numbers::pi_v<long double> / (2.0L * static_cast<long double>(e.p));
    const long double denom = e.p < 2.0 ? 2.0L * std::cos(half) : 2.0L * std::sin(half);
    const long double value = std::pow(2.0L, 1.0L / static_cast<long double>(e.s)) / denom;
    return {static_cast<double>(value), classify(e)};
}

/// Sharp constant of the max-aggregate estimate, 1/sin(pi/p).  This is also
/// the s -> inf limit of the sharp constants for every 1 < p < inf.
inline double hv_max_constant(double p) {
    validate_p(p);
    return static_cast<double>(
        1.0L / std::sin(std::numbers::pi_v<long double> / static_cast<long double>(p)));
}

/// Best constant c_p in ||u + iHu||_p <= c_p ||u||_p for real u:
/// sec(pi/2p) below p = 2, csc(pi/2p) above (they agree at 2).
inline double verbitsky_constant(double p) {
    validate_p(p);
    const long double half = std::numbers::pi_v<long double> / (2.0L * static_cast<long double>(p));
    return static_cast<double>(p <= 2.0 ? 1.0L / std::cos(half) : 1.0L / std::sin(half));
}

/// Norm of the conjugation operator on L^p: tan(pi/(2 p~)) with
/// p~ = min(p, p/(p-1)).
inline double pichorides_constant(double p) {
    validate_p(p);
    const long double pd = static_cast<long double>(p);
    const long double pt = std::min(pd, pd / (pd - 1.0L));
    return static_cast<double>(std::tan(std::numbers::pi_v<long double> / (2.0L * pt)));
}

}  // namespace riesz
