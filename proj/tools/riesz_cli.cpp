// Command-line front end: every computation of the library as a
// reproducible subcommand with machine-readable output.  All behavior is
// determined by argv alone; output is written once, as a single block.
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riesz/certify.hpp"
#include "riesz/constants.hpp"
#include "riesz/experiments.hpp"
#include "riesz/lower_bound.hpp"
#include "riesz/report_io.hpp"

namespace {

constexpr double kRatioTolerance = 1e-6;  // relative slack before exit code 1

enum class Format { Human, Json, Csv };

struct Common {
    bool json = false;
    bool csv = false;
    std::string out_path;

    Format format() const { return json ? Format::Json : (csv ? Format::Csv : Format::Human); }
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_flag("--json", c.json, "emit JSON");
    cmd->add_flag("--csv", c.csv, "emit CSV");
    cmd->add_option("--out", c.out_path, "write output to this path instead of stdout");
}

std::ostringstream make_stream() {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17);
    return os;
}

// Single write, then flush: the output appears exactly once, whole.
int emit(const Common& c, const std::string& text, int code) {
    if (c.out_path.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        std::fflush(stdout);
    } else {
        std::ofstream out(c.out_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            std::cerr << "riesz: cannot open output path " << c.out_path << "\n";
            return 3;
        }
        out.write(text.data(), static_cast<std::streamsize>(text.size()));
    }
    return code;
}

int run_constants(const Common& c, double p, double s) {
    const riesz::ExponentPair e{p, s};
    const auto sc = riesz::sharp_constant(e);
    if (c.format() == Format::Json) {
        riesz::ordered_json j;
        j["p"] = p;
        j["s"] = s;
        j["C"] = sc.value;
        j["regime"] = std::string(to_string(sc.regime));
        j["condition"] = std::string(riesz::regime_condition(sc.regime));
        j["hv_max"] = riesz::hv_max_constant(p);
        j["verbitsky"] = riesz::verbitsky_constant(p);
        j["pichorides"] = riesz::pichorides_constant(p);
        return emit(c, j.dump(2) + "\n", 0);
    }
    auto os = make_stream();
    os << "p = " << p << ", s = " << s << "\n"
       << "regime      " << to_string(sc.regime) << "  (" << riesz::regime_condition(sc.regime)
       << ")\n"
       << "C_{s,p}     " << sc.value
       << (sc.regime == riesz::Regime::LowerBoundOnly ? "  [conjectured closed form; lower bound]"
                                                      : "")
       << "\n"
       << "hv_max      " << riesz::hv_max_constant(p) << "  (s -> inf limit)\n"
       << "verbitsky   " << riesz::verbitsky_constant(p) << "\n"
       << "pichorides  " << riesz::pichorides_constant(p) << "\n";
    return emit(c, os.str(), 0);
}

int run_lower_bound(const Common& c, double p, double s, int grid) {
    const riesz::ExponentPair e{p, s};
    const auto r = riesz::lower_bound(e, grid);
    if (c.format() == Format::Json) {
        return emit(c, riesz::to_json(r, e).dump(2) + "\n", 0);
    }
    auto os = make_stream();
    os << "lower bound C_{s,p} >= " << r.value << "\n"
       << "attained at t = " << r.arg_t << " (" << to_string(r.branch) << ", "
       << to_string(r.sign_branch) << ")\n";
    return emit(c, os.str(), 0);
}

int run_asymptote(const Common& c, double p, double s_max, int steps) {
    if (steps < 2) throw CLI::ValidationError("--steps", "need at least 2 steps");
    std::vector<double> svals(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        svals[static_cast<std::size_t>(k)] = s_max * std::pow(2.0, k - steps + 1);
    }
    const auto rows = riesz::asymptotic_sweep(p, svals);
    if (c.format() == Format::Json) {
        return emit(c, riesz::to_json(rows, p).dump(2) + "\n", 0);
    }
    if (c.format() == Format::Csv) {
        return emit(c, riesz::asymptote_csv(rows), 0);
    }
    auto os = make_stream();
    os << "limit 1/sin(pi/p) = " << riesz::hv_max_constant(p) << "\n";
    for (const auto& row : rows) {
        os << "s = " << std::setw(22) << row.s << "  lower_bound = " << row.lower_bound << "\n";
    }
    return emit(c, os.str(), 0);
}

int run_certify(const Common& c, const std::string& ineq, double p, double s, double eps,
                int max_depth) {
    const auto id = riesz::parse_inequality(ineq);
    if (!id) {
        throw CLI::ValidationError("--ineq",
                                   "expected lemma41|lemma42|eq1|claim51|auxg|eq1shift");
    }
    const riesz::ExponentPair e{p, s};
    const auto rep = riesz::certify_nonneg(*id, e, eps, max_depth);
    int code = 0;
    if (rep.status == riesz::CertStatus::ViolationFound) code = 1;
    if (rep.status == riesz::CertStatus::Inconclusive) code = 2;
    if (c.format() == Format::Json) {
        return emit(c, riesz::to_json(rep).dump(2) + "\n", code);
    }
    auto os = make_stream();
    os << "inequality  " << to_string(rep.id) << "  (p = " << p << ", s = " << s << ")\n"
       << "status      " << to_string(rep.status) << "\n"
       << "lower bound " << rep.rigorous_lower_bound << "  (eps = " << eps << ")\n"
       << "min sample  " << rep.min_sample_value << " at (" << rep.min_sample_point[0];
    if (rep.box.dims == 2) os << ", " << rep.min_sample_point[1];
    os << ")\n"
       << "boxes       " << rep.boxes_processed << ", depth " << rep.max_depth_reached << "\n";
    return emit(c, os.str(), code);
}

int run_ratio(const Common& c, double p, double s, double frac, double alpha, double beta,
              std::size_t n) {
    const riesz::ExponentPair e{p, s};
    const auto r = riesz::extremal_ratio(e, frac, alpha, beta, n);
    const int code = r.ratio > r.reference * (1.0 + kRatioTolerance) ? 1 : 0;
    if (c.format() == Format::Json) {
        return emit(c, riesz::to_json(r).dump(2) + "\n", code);
    }
    auto os = make_stream();
    os << "ratio     " << r.ratio << "\n"
       << "reference " << r.reference << "  (margin " << r.margin << ")\n";
    return emit(c, os.str(), code);
}

int run_sweep(const Common& c, double p, double s, const std::vector<double>& fracs,
              std::size_t n) {
    const riesz::ExponentPair e{p, s};
    const auto grid = riesz::default_ab_grid();
    const auto rows = riesz::extremal_sweep(e, fracs, grid, n);
    int code = 0;
    for (const auto& r : rows) {
        if (r.ratio > r.reference * (1.0 + kRatioTolerance)) code = 1;
    }
    if (c.format() == Format::Json) {
        riesz::ordered_json arr = riesz::ordered_json::array();
        for (const auto& r : rows) arr.push_back(riesz::to_json(r));
        return emit(c, arr.dump(2) + "\n", code);
    }
    return emit(c, riesz::sweep_csv(rows), code);
}

int run_search(const Common& c, double p, double s, int trials, int degree, std::uint64_t seed) {
    const riesz::ExponentPair e{p, s};
    const auto res = riesz::random_ratio_search(e, trials, degree, seed);
    const auto& r = res.best;
    const int code = r.ratio > r.reference * (1.0 + kRatioTolerance) ? 1 : 0;
    if (c.format() == Format::Json) {
        return emit(c, riesz::to_json(r).dump(2) + "\n", code);
    }
    auto os = make_stream();
    os << "max ratio " << r.ratio << " over " << trials << " trials (degree " << degree
       << ", seed " << seed << ")\n"
       << "reference " << r.reference << "  (margin " << r.margin << ")\n";
    return emit(c, os.str(), code);
}

int run_conjugate(const Common& c, double p, int trials, std::uint64_t seed) {
    const auto res = riesz::conjugate_ratio_search(p, trials, 16, seed);
    const int code = res.max_ratio > res.reference * (1.0 + kRatioTolerance) ? 1 : 0;
    if (c.format() == Format::Json) {
        riesz::ordered_json j;
        j["p"] = p;
        j["trials"] = res.trials;
        j["seed"] = res.seed;
        j["max_ratio"] = res.max_ratio;
        j["reference"] = res.reference;
        j["margin"] = res.max_ratio / res.reference;
        return emit(c, j.dump(2) + "\n", code);
    }
    auto os = make_stream();
    os << "max conjugate ratio " << res.max_ratio << " over " << res.trials
       << " trials (seed " << res.seed << ")\n"
       << "reference c_p       " << res.reference << "\n";
    return emit(c, os.str(), code);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sharp constants for joint analytic/co-analytic projection estimates"};
    app.require_subcommand(1);

    Common common;

    double p = 2.0, s = 2.0, s_max = 200.0, eps = 1e-9, frac = 0.9, alpha = 1.0, beta = 0.0;
    int grid = 10000, steps = 6, max_depth = 48, trials = 1000, degree = 16;
    std::size_t n = std::size_t{1} << 16;
    std::uint64_t seed = 1;
    std::string ineq;
    std::vector<double> fracs;

    auto* c_const = app.add_subcommand("constants", "closed-form sharp constants at (p, s)");
    c_const->add_option("--p", p, "Lebesgue exponent")->required();
    c_const->add_option("--s", s, "aggregation order")->required();
    add_common(c_const, common);

    auto* c_lb = app.add_subcommand("lower-bound", "extremal-family lower bound at (p, s)");
    c_lb->add_option("--p", p)->required();
    c_lb->add_option("--s", s)->required();
    c_lb->add_option("--grid", grid, "scan points for the supremum guard");
    add_common(c_lb, common);

    auto* c_asym = app.add_subcommand("asymptote", "lower bounds along a doubling s-ladder");
    c_asym->add_option("--p", p)->required();
    c_asym->add_option("--s-max", s_max, "last s value of the ladder")->required();
    c_asym->add_option("--steps", steps, "number of ladder points");
    add_common(c_asym, common);

    auto* c_cert = app.add_subcommand("certify", "branch-and-bound nonnegativity certification");
    c_cert->add_option("--ineq", ineq, "lemma41|lemma42|eq1|claim51|auxg|eq1shift")->required();
    c_cert->add_option("--p", p)->required();
    c_cert->add_option("--s", s, "aggregation order (lemma41/lemma42/auxg)");
    c_cert->add_option("--eps", eps, "certification slack");
    c_cert->add_option("--max-depth", max_depth, "subdivision depth limit");
    add_common(c_cert, common);

    auto* c_ratio = app.add_subcommand("ratio", "projection ratio of one extremal test function");
    c_ratio->add_option("--p", p)->required();
    c_ratio->add_option("--s", s)->required();
    c_ratio->add_option("--gamma-frac", frac, "gamma as a fraction of pi/(2p)")->required();
    c_ratio->add_option("--alpha", alpha)->required();
    c_ratio->add_option("--beta", beta)->required();
    c_ratio->add_option("--n", n, "quadrature resolution (power of two)");
    add_common(c_ratio, common);

    auto* c_sweep = app.add_subcommand("sweep", "extremal ratios over gamma fractions");
    c_sweep->add_option("--p", p)->required();
    c_sweep->add_option("--s", s)->required();
    c_sweep->add_option("--fracs", fracs, "gamma fractions in (0,1)")
        ->required()
        ->delimiter(',');
    c_sweep->add_option("--n", n, "quadrature resolution (power of two)");
    add_common(c_sweep, common);

    auto* c_search = app.add_subcommand("search", "random-polynomial never-exceed search");
    c_search->add_option("--p", p)->required();
    c_search->add_option("--s", s)->required();
    c_search->add_option("--trials", trials)->required();
    c_search->add_option("--degree", degree)->required();
    c_search->add_option("--seed", seed)->required();
    add_common(c_search, common);

    auto* c_conj = app.add_subcommand("conjugate", "random real-polynomial conjugate-ratio search");
    c_conj->add_option("--p", p)->required();
    c_conj->add_option("--trials", trials)->required();
    c_conj->add_option("--seed", seed)->required();
    add_common(c_conj, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "riesz: " << e.what() << "\n";
        return 3;
    }

    try {
        if (app.got_subcommand(c_const)) return run_constants(common, p, s);
        if (app.got_subcommand(c_lb)) return run_lower_bound(common, p, s, grid);
        if (app.got_subcommand(c_asym)) return run_asymptote(common, p, s_max, steps);
        if (app.got_subcommand(c_cert)) return run_certify(common, ineq, p, s, eps, max_depth);
        if (app.got_subcommand(c_ratio)) return run_ratio(common, p, s, frac, alpha, beta, n);
        if (app.got_subcommand(c_sweep)) return run_sweep(common, p, s, fracs, n);
        if (app.got_subcommand(c_search)) return run_search(common, p, s, trials, degree, seed);
        if (app.got_subcommand(c_conj)) return run_conjugate(common, p, trials, seed);
    } catch (const CLI::Error& e) {
        std::cerr << "riesz: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "riesz: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
