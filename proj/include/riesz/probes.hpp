#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>

#include "riesz/inequalities.hpp"

namespace riesz {

/// The subharmonic minorant phi_p(z) = |z|^(p/2) v_p(arg z - pi/2), with the
/// shifted argument wrapped back into [-pi, pi].  phi_2 reduces to Im z.
inline double phi_subharmonic(std::complex<double> z, double p) {
    const double m = std::abs(z);
    if (m == 0.0) return 0.0;
    double t = std::arg(z) - 0.5 * std::numbers::pi;
    if (t < -std::numbers::pi) t += 2.0 * std::numbers::pi;
    return std::pow(m, 0.5 * p) * v_weight(t, p);
}

struct SubharmonicReport {
    double p;
    double radius;
    int quadrature_points;
    int centers;
    double min_deficit;              // min over centers of (circle mean - center value)
    std::complex<double> worst_center;
    double quadrature_tol;           // declared quadrature error allowance
};

/// Mean-value probe of the subharmonicity of phi_p: for each center computes
/// the trapezoid mean of phi_p over the circle of the given radius minus the
/// center value.  Subharmonicity predicts a nonnegative deficit up to
/// quadrature error.
inline SubharmonicReport subharmonic_probe(double p, std::span<const std::complex<double>> centers,
                                           double radius, int quadrature_points) {
    if (!(p >= 2.0)) throw std::invalid_argument("subharmonic_probe: requires p >= 2");
    if (!(radius > 0.0)) throw std::invalid_argument("subharmonic_probe: radius must be positive");
    if (quadrature_points < 16) {
        throw std::invalid_argument("subharmonic_probe: need at least 16 quadrature points");
    }
    if (centers.empty()) throw std::invalid_argument("subharmonic_probe: no centers");

    SubharmonicReport rep{p, radius, quadrature_points, static_cast<int>(centers.size()),
                          std::numeric_limits<double>::infinity(), {}, 0.0};
    double max_scale = 0.0;
    for (const auto& z0 : centers) {
        if (std::abs(z0) < 0.5 * radius) {
            throw std::invalid_argument("subharmonic_probe: centers must avoid 0 by radius/2");
        }
        double sum = 0.0;
        for (int k = 0; k < quadrature_points; ++k) {
            const double th = 2.0 * std::numbers::pi * k / quadrature_points;
            const std::complex<double> z = z0 + std::polar(radius, th);
            sum += phi_subharmonic(z, p);
            max_scale = std::max(max_scale, std::pow(std::abs(z), 0.5 * p));
        }
        const double deficit = sum / quadrature_points - phi_subharmonic(z0, p);
        if (deficit < rep.min_deficit) {
            rep.min_deficit = deficit;
            rep.worst_center = z0;
        }
    }
    // Trapezoid error allowance: O(h^2) per derivative jump of v_p along the
    // circle, h = 2 pi / quadrature points.
    const double h = 2.0 * std::numbers::pi / quadrature_points;
    rep.quadrature_tol = max_scale * p * h * h;
    return rep;
}

}  // namespace riesz
