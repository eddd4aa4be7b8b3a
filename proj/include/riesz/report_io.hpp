#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "riesz/certify.hpp"
#include "riesz/experiments.hpp"
#include "riesz/lower_bound.hpp"
#include "riesz/probes.hpp"

namespace riesz {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const CertificationReport& r) {
    ordered_json j;
    j["id"] = std::string(to_string(r.id));
    j["p"] = r.p;
    j["s"] = r.s;
    ordered_json box = ordered_json::array();
    for (int i = 0; i < r.box.dims; ++i) {
        box.push_back(r.box.lo[i]);
        box.push_back(r.box.hi[i]);
    }
    j["box"] = box;
    j["status"] = std::string(to_string(r.status));
    j["lower_bound"] = r.rigorous_lower_bound;
    ordered_json pt = ordered_json::array();
    for (int i = 0; i < r.box.dims; ++i) pt.push_back(r.min_sample_point[i]);
    j["min_point"] = pt;
    j["min_value"] = r.min_sample_value;
    j["boxes"] = r.boxes_processed;
    j["depth"] = r.max_depth_reached;
    j["eps"] = r.eps;
    return j;
}

inline ordered_json to_json(const RatioReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["s"] = r.s;
    if (r.gamma) j["gamma"] = *r.gamma; else j["gamma"] = nullptr;
    if (r.alpha) j["alpha"] = *r.alpha; else j["alpha"] = nullptr;
    if (r.beta) j["beta"] = *r.beta; else j["beta"] = nullptr;
    j["N"] = r.n;
    j["ratio"] = r.ratio;
    j["reference"] = r.reference;
    j["margin"] = r.margin;
    if (r.seed) j["seed"] = *r.seed;
    return j;
}

/// CSV rows of an extremal sweep, header "gamma_frac,alpha,beta,N,ratio,reference".
inline std::string sweep_csv(std::span<const RatioReport> rows) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << "gamma_frac,alpha,beta,N,ratio,reference\n";
    for (const auto& r : rows) {
        os << (r.gamma_frac ? *r.gamma_frac : 0.0) << ',' << (r.alpha ? *r.alpha : 0.0) << ','
           << (r.beta ? *r.beta : 0.0) << ',' << r.n << ',' << r.ratio << ',' << r.reference
           << '\n';
    }
    return os.str();
}

inline ordered_json to_json(const LowerBoundResult& r, const ExponentPair& e) {
    ordered_json j;
    j["p"] = e.p;
    j["s"] = e.s;
    j["value"] = r.value;
    j["arg_t"] = r.arg_t;
    j["branch"] = std::string(to_string(r.branch));
    j["sign_branch"] = std::string(to_string(r.sign_branch));
    return j;
}

inline ordered_json to_json(std::span<const AsymptoticRow> rows, double p) {
    ordered_json j;
    j["p"] = p;
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json row;
        row["s"] = r.s;
        row["lower_bound"] = r.lower_bound;
        row["limit"] = r.limit;
        arr.push_back(row);
    }
    j["rows"] = arr;
    return j;
}

inline std::string asymptote_csv(std::span<const AsymptoticRow> rows) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(17);
    os << "s,lower_bound,limit\n";
    for (const auto& r : rows) os << r.s << ',' << r.lower_bound << ',' << r.limit << '\n';
    return os.str();
}

inline ordered_json to_json(const SubharmonicReport& r) {
    ordered_json j;
    j["p"] = r.p;
    j["radius"] = r.radius;
    j["quadrature_points"] = r.quadrature_points;
    j["centers"] = r.centers;
    j["min_deficit"] = r.min_deficit;
    j["worst_center"] = ordered_json::array({r.worst_center.real(), r.worst_center.imag()});
    j["quadrature_tol"] = r.quadrature_tol;
    return j;
}

}  // namespace riesz
