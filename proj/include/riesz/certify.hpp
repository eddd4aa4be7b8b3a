#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "riesz/constants.hpp"
#include "riesz/dual.hpp"
#include "riesz/inequalities.hpp"
#include "riesz/interval.hpp"

namespace riesz {

/// The certifiable pointwise inequalities.  Eq1Shifted is the t = 0 section
/// shifted down by 0.01, a falsification fixture that any sound certifier
/// must reject.
enum class InequalityId { Lemma41, Lemma42, Eq1Section5, Claim51, AuxG, Eq1Shifted };

inline std::string_view to_string(InequalityId id) {
    switch (id) {
        case InequalityId::Lemma41: return "lemma41";
        case InequalityId::Lemma42: return "lemma42";
        case InequalityId::Eq1Section5: return "eq1";
        case InequalityId::Claim51: return "claim51";
        case InequalityId::AuxG: return "auxg";
        case InequalityId::Eq1Shifted: return "eq1shift";
    }
    return "?";
}

inline std::optional<InequalityId> parse_inequality(std::string_view name) {
    if (name == "lemma41") return InequalityId::Lemma41;
    if (name == "lemma42") return InequalityId::Lemma42;
    if (name == "eq1") return InequalityId::Eq1Section5;
    if (name == "claim51") return InequalityId::Claim51;
    if (name == "auxg") return InequalityId::AuxG;
    if (name == "eq1shift") return InequalityId::Eq1Shifted;
    return std::nullopt;
}

/// Axis-aligned box, one- or two-dimensional.  Dimension 0 is r (or the
/// p-segment for Claim51), dimension 1 is the angle t.
struct Box {
    int dims;
    std::array<double, 2> lo{}, hi{};

    static Box segment(double a, double b) { return {1, {a, 0.0}, {b, 0.0}}; }
    static Box rect(double a, double b, double c, double d) { return {2, {a, c}, {b, d}}; }

    double width(int i) const { return hi[i] - lo[i]; }
    double mid(int i) const { return 0.5 * (lo[i] + hi[i]); }
};

enum class CertStatus { Certified, ViolationFound, Inconclusive };

inline std::string_view to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::ViolationFound: return "ViolationFound";
        case CertStatus::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct CertificationReport {
    InequalityId id;
    double p, s;
    Box box;
    CertStatus status;
    double rigorous_lower_bound;              // min over leaf boxes of their interval bound
    std::array<double, 2> min_sample_point{};  // smallest pointwise sample seen
    double min_sample_value;
    std::uint64_t boxes_processed;
    int max_depth_reached;
    double eps;
};

/// Domain of the inequality as stated: the full box the certifier covers by
/// default.
inline Box default_box(InequalityId id, const ExponentPair& e) {
    switch (id) {
        case InequalityId::Lemma41: return Box::rect(0.0, 1.0, 0.0, std::numbers::pi);
        case InequalityId::Lemma42: return Box::rect(0.0, 1.0, 0.0, phi_high_t_max(e.p));
        case InequalityId::Eq1Section5:
        case InequalityId::Eq1Shifted: return Box::segment(0.0, 1.0);
        case InequalityId::Claim51: return Box::segment(2.0, std::max(e.p, 2.0 + 1e-9));
        case InequalityId::AuxG: return Box::segment(0.0, 1.0);
    }
    throw std::logic_error("default_box: unknown inequality");
}

namespace detail {

inline void check_contract(InequalityId id, const ExponentPair& e, const Box& box) {
    const auto in01 = [](double lo, double hi) { return lo >= 0.0 && hi <= 1.0 && lo <= hi; };
    switch (id) {
        case InequalityId::Lemma41:
            if (!((e.s == 4.0 && e.p > 1.0 && e.p <= 1.25) ||
                  (e.s == 2.0 && e.p > 1.25 && e.p < 2.0))) {
                throw std::invalid_argument(
                    "certify(lemma41): requires (s=4 and 1<p<=5/4) or (s=2 and 5/4<p<2)");
            }
            if (box.dims != 2 || !in01(box.lo[0], box.hi[0]) || box.lo[1] < 0.0 ||
                box.hi[1] > std::numbers::pi * (1.0 + 1e-15)) {
                throw std::invalid_argument("certify(lemma41): box must lie in [0,1] x [0,pi]");
            }
            break;
        case InequalityId::Lemma42:
            if (!(e.p >= 2.0 && e.p <= 150.0 && e.s > 0.0 && e.s <= e.p)) {
                throw std::invalid_argument(
                    "certify(lemma42): requires 2 <= p <= 150 and 0 < s <= p");
            }
            if (box.dims != 2 || !in01(box.lo[0], box.hi[0]) || box.lo[1] < 0.0 ||
                box.hi[1] > phi_high_t_max(e.p) * (1.0 + 1e-15)) {
                throw std::invalid_argument(
                    "certify(lemma42): box must lie in [0,1] x [0,t_max(p)]");
            }
            break;
        case InequalityId::Eq1Section5:
        case InequalityId::Eq1Shifted:
            // (2 sin(pi/2p))^{-p} leaves binary64 range near p ~ 160, after
            // which no finite-precision bound is possible.
            if (!(e.p >= 2.0 && e.p <= 150.0)) {
                throw std::invalid_argument("certify(eq1): requires 2 <= p <= 150");
            }
            if (box.dims != 1 || !in01(box.lo[0], box.hi[0])) {
                throw std::invalid_argument("certify(eq1): box must be a segment of [0,1]");
            }
            break;
        case InequalityId::Claim51:
            if (box.dims != 1 || box.lo[0] < 2.0 || box.hi[0] < box.lo[0]) {
                throw std::invalid_argument("certify(claim51): box must be a segment of [2,inf)");
            }
            break;
        case InequalityId::AuxG:
            if (!(e.s >= 2.0)) {
                throw std::invalid_argument("certify(auxg): requires s >= 2");
            }
            if (box.dims != 1 || !in01(box.lo[0], box.hi[0])) {
                throw std::invalid_argument("certify(auxg): box must be a segment of [0,1]");
            }
            break;
    }
}

// Expression evaluation for a fixed (id, p, s) in the scalar types the search
// needs: plain doubles for midpoint sampling, Intervals for point enclosures,
// Interval duals for natural bounds plus derivatives in one pass.
class BnbEvaluator {
  public:
    BnbEvaluator(InequalityId id, double p, double s)
        : id_(id),
          p_(p),
          s_(s),
          kd_(make_proj_constants<double>(p)),
          ki_(make_proj_constants<Interval>(p)),
          k1_(make_proj_constants<Dual<Interval, 1>>(p)),
          k2_(make_proj_constants<Dual<Interval, 2>>(p)),
          k11_(make_proj_constants<Dual<Dual<Interval, 1>, 1>>(p)),
          k22_(make_proj_constants<Dual<Dual<Interval, 2>, 2>>(p)) {}

    int dims() const {
        return (id_ == InequalityId::Lemma41 || id_ == InequalityId::Lemma42) ? 2 : 1;
    }

    double value(const std::array<double, 2>& x) const { return eval(x[0], x[1], kd_); }

    Interval point_enclosure(const std::array<double, 2>& x) const {
        return eval(Interval(x[0]), Interval(x[1]), ki_);
    }

    Interval natural(const Box& b) const {
        return eval(Interval(b.lo[0], b.hi[0]),
                    b.dims == 2 ? Interval(b.lo[1], b.hi[1]) : Interval(0.0), ki_);
    }

    struct Enclosure2 {
        Interval value;                             // natural extension over the box
        std::array<Interval, 2> grad;               // gradient over the box
        std::array<std::array<Interval, 2>, 2> hess;  // Hessian over the box
    };

    Enclosure2 box_enclosure2(const Box& b) const {
        Enclosure2 out{};
        if (b.dims == 1) {
            using D1 = Dual<Interval, 1>;
            using D2 = Dual<D1, 1>;
            D2 x;
            x.v = D1::variable(Interval(b.lo[0], b.hi[0]), 0);
            x.d[0] = D1::constant(Interval(1.0));
            const D2 r = eval(x, D2::constant(D1::constant(Interval(0.0))), k11_);
            out.value = r.v.v;
            out.grad[0] = r.v.d[0];
            out.hess[0][0] = r.d[0].d[0];
            return out;
        }
        using D2 = Dual<Interval, 2>;
        using D4 = Dual<D2, 2>;
        std::array<D4, 2> x;
        for (int i = 0; i < 2; ++i) {
            x[i].v = D2::variable(Interval(b.lo[i], b.hi[i]), i);
            x[i].d[i] = D2::constant(Interval(1.0));
            x[i].d[1 - i] = D2::constant(Interval(0.0));
        }
        const D4 r = eval(x[0], x[1], k22_);
        out.value = r.v.v;
        for (int i = 0; i < 2; ++i) {
            out.grad[i] = r.v.d[i];
            for (int j = 0; j < 2; ++j) out.hess[i][j] = r.d[i].d[j];
        }
        return out;
    }

    /// Rigorous lower bound over the box: the natural interval extension,
    /// sharpened when it does not already clear -eps by the first-order
    /// centered form F(m) + grad(X).(X - m) and the second-order Taylor form
    /// F(m) + grad(m).(X - m) + (X-m)' H(X) (X-m) / 2.  The centered form
    /// converges quadratically on equality manifolds where the natural
    /// extension stalls; the Taylor form cubically, which keeps the box count
    /// finite on the identically-zero sections at p = 2.
    double lower_bound(const Box& b, double eps) const {
        const double nat = natural(b).lo();
        if (nat >= -eps) return nat;
        const Enclosure2 enc = box_enclosure2(b);
        double lower = std::max(nat, enc.value.lo());

        std::array<double, 2> mid{b.mid(0), b.dims == 2 ? b.mid(1) : 0.0};
        Interval at_mid(0.0);
        std::array<Interval, 2> grad_mid{Interval(0.0), Interval(0.0)};
        bool mid_ok = true;
        if (b.dims == 1) {
            const auto r = eval(Dual<Interval, 1>::variable(Interval(mid[0]), 0),
                                Dual<Interval, 1>::constant(Interval(0.0)), k1_);
            at_mid = r.v;
            grad_mid[0] = r.d[0];
        } else {
            const auto r = eval(Dual<Interval, 2>::variable(Interval(mid[0]), 0),
                                Dual<Interval, 2>::variable(Interval(mid[1]), 1), k2_);
            at_mid = r.v;
            grad_mid = {r.d[0], r.d[1]};
        }
        mid_ok = at_mid.is_finite();

        // First-order centered form with the gradient over the box.
        if (mid_ok) {
            Interval centered = at_mid;
            bool usable = true;
            for (int i = 0; i < b.dims && usable; ++i) {
                if (!enc.grad[i].is_finite()) {
                    usable = false;
                    break;
                }
                const double h = 0.5 * b.width(i);
                centered = centered + enc.grad[i] * Interval(-h, h);
            }
            if (usable) lower = std::max(lower, centered.lo());
        }

        // Second-order Taylor form with the Hessian over the box.
        if (mid_ok) {
            Interval taylor = at_mid;
            bool usable = true;
            for (int i = 0; i < b.dims && usable; ++i) {
                if (!grad_mid[i].is_finite()) {
                    usable = false;
                    break;
                }
                const double h = 0.5 * b.width(i);
                taylor = taylor + grad_mid[i] * Interval(-h, h);
            }
            for (int i = 0; i < b.dims && usable; ++i) {
                const double hi = 0.5 * b.width(i);
                for (int j = i; j < b.dims && usable; ++j) {
                    if (!enc.hess[i][j].is_finite()) {
                        usable = false;
                        break;
                    }
                    const double hj = 0.5 * b.width(j);
                    const Interval dd = i == j ? sqr(Interval(-hi, hi))
                                               : Interval(-hi * hj, hi * hj) * 2.0;
                    taylor = taylor + enc.hess[i][j] * dd * 0.5;
                }
            }
            if (usable) lower = std::max(lower, taylor.lo());
        }
        return lower;
    }

  private:
    template <class T>
    T eval(const T& x0, const T& x1, const ProjConstants<T>& k) const {
        switch (id_) {
            case InequalityId::Lemma41: return phi_low_expr(x0, x1, p_, s_, k);
            case InequalityId::Lemma42: return phi_high_expr(x0, x1, p_, s_, k);
            case InequalityId::Eq1Section5: return phi_t0_expr(x0, p_, k);
            case InequalityId::Eq1Shifted: return phi_t0_expr(x0, p_, k) - 0.01;
            case InequalityId::Claim51: return claim51_expr(x0);
            case InequalityId::AuxG: return auxg_expr(x0, s_);
        }
        throw std::logic_error("BnbEvaluator: unknown inequality");
    }

    InequalityId id_;
    double p_, s_;
    ProjConstants<double> kd_;
    ProjConstants<Interval> ki_;
    ProjConstants<Dual<Interval, 1>> k1_;
    ProjConstants<Dual<Interval, 2>> k2_;
    ProjConstants<Dual<Dual<Interval, 1>, 1>> k11_;
    ProjConstants<Dual<Dual<Interval, 2>, 2>> k22_;
};

struct SubResult {
    double min_lower = std::numeric_limits<double>::infinity();
    double best_sample = std::numeric_limits<double>::infinity();
    std::array<double, 2> best_point{};
    std::uint64_t boxes = 0;
    int max_depth = 0;
    bool inconclusive = false;
    std::optional<std::array<double, 2>> violation;
    double violation_value = 0.0;
};

inline bool lex_less(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
}

// Depth-first processing of one subtree.  Fully deterministic: fixed split
// rule (widest dimension, ties to dimension 0), left child first, stop at the
// first violating sample.
inline SubResult bnb_subtree(const BnbEvaluator& ev, Box root, int root_depth, double eps,
                             int max_depth) {
    SubResult out;
    struct Item {
        Box box;
        int depth;
    };
    std::vector<Item> stack{{root, root_depth}};
    while (!stack.empty()) {
        const auto [box, depth] = stack.back();
        stack.pop_back();
        ++out.boxes;
        out.max_depth = std::max(out.max_depth, depth);

        std::array<double, 2> mid{box.mid(0), box.dims == 2 ? box.mid(1) : 0.0};
        const double v = ev.value(mid);
        if (v < out.best_sample || (v == out.best_sample && lex_less(mid, out.best_point))) {
            out.best_sample = v;
            out.best_point = mid;
        }
        if (v < -eps) {
            out.violation = mid;
            out.violation_value = v;
            return out;
        }

        const double lb = ev.lower_bound(box, eps);
        if (lb >= -eps) {
            out.min_lower = std::min(out.min_lower, lb);
            continue;
        }
        if (depth >= max_depth) {
            out.min_lower = std::min(out.min_lower, lb);
            out.inconclusive = true;
            continue;
        }
        int split = 0;
        if (box.dims == 2 && box.width(1) > box.width(0)) split = 1;
        Box left = box, right = box;
        left.hi[split] = box.mid(split);
        right.lo[split] = box.mid(split);
        stack.push_back({right, depth + 1});  // left on top: processed first
        stack.push_back({left, depth + 1});
    }
    return out;
}

}  // namespace detail

/// Adaptive branch-and-bound certification that the chosen inequality is
/// >= -eps over the box.  Every box is bounded below with outward-rounded
/// interval arithmetic; a box is certified when its bound clears -eps,
/// refuted when a sampled midpoint falls below -eps, and split along its
/// widest dimension otherwise, to max_depth.  The work is distributed over a
/// fixed frontier of subtrees merged in index order, so identical inputs
/// yield identical reports regardless of the parallel schedule.
inline CertificationReport certify_nonneg(InequalityId id, const ExponentPair& e, const Box& box,
                                          double eps = 1e-9, int max_depth = 48,
                                          bool parallel = true) {
    if (!(eps >= 0.0)) throw std::invalid_argument("certify: eps must be nonnegative");
    if (max_depth < 1 || max_depth > 200) {
        throw std::invalid_argument("certify: max_depth must lie in [1, 200]");
    }
    detail::check_contract(id, e, box);
    const detail::BnbEvaluator ev(id, e.p, e.s);

    // Deterministic frontier: repeatedly split the first box (FIFO) along its
    // widest dimension into a fixed number of independent subtrees.  The
    // decomposition never depends on the hardware or the parallel flag, so
    // reports are identical whether or not the subtrees run concurrently.
    constexpr std::size_t target = 8;
    struct Item {
        Box box;
        int depth;
    };
    std::vector<Item> frontier{{box, 0}};
    while (frontier.size() < target) {
        Item it = frontier.front();
        frontier.erase(frontier.begin());
        if (it.depth >= max_depth) {
            frontier.push_back(it);
            break;
        }
        int split = 0;
        if (it.box.dims == 2 && it.box.width(1) > it.box.width(0)) split = 1;
        Item left = it, right = it;
        left.box.hi[split] = it.box.mid(split);
        right.box.lo[split] = it.box.mid(split);
        ++left.depth;
        ++right.depth;
        frontier.push_back(left);
        frontier.push_back(right);
    }

    std::vector<detail::SubResult> results(frontier.size());
    if (parallel && std::thread::hardware_concurrency() > 1 && frontier.size() > 1) {
        std::vector<std::future<detail::SubResult>> futs;
        futs.reserve(frontier.size());
        for (const auto& it : frontier) {
            futs.push_back(std::async(std::launch::async, [&ev, it, eps, max_depth] {
                return detail::bnb_subtree(ev, it.box, it.depth, eps, max_depth);
            }));
        }
        for (std::size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            results[i] = detail::bnb_subtree(ev, frontier[i].box, frontier[i].depth, eps, max_depth);
        }
    }

    // Merge in frontier order: min of rigorous bounds, lexicographically
    // smallest witness, min sample by (value, point).
    CertificationReport rep{};
    rep.id = id;
    rep.p = e.p;
    rep.s = e.s;
    rep.box = box;
    rep.eps = eps;
    rep.rigorous_lower_bound = std::numeric_limits<double>::infinity();
    rep.min_sample_value = std::numeric_limits<double>::infinity();
    bool violated = false, inconclusive = false;
    std::array<double, 2> witness{};
    for (const auto& r : results) {
        rep.boxes_processed += r.boxes;
        rep.max_depth_reached = std::max(rep.max_depth_reached, r.max_depth);
        rep.rigorous_lower_bound = std::min(rep.rigorous_lower_bound, r.min_lower);
        inconclusive = inconclusive || r.inconclusive;
        if (r.best_sample < rep.min_sample_value ||
            (r.best_sample == rep.min_sample_value &&
             detail::lex_less(r.best_point, rep.min_sample_point))) {
            rep.min_sample_value = r.best_sample;
            rep.min_sample_point = r.best_point;
        }
        if (r.violation && (!violated || detail::lex_less(*r.violation, witness))) {
            violated = true;
            witness = *r.violation;
        }
    }
    if (violated) {
        rep.status = CertStatus::ViolationFound;
        rep.min_sample_point = witness;
        rep.min_sample_value = ev.value(witness);
    } else {
        rep.status = inconclusive ? CertStatus::Inconclusive : CertStatus::Certified;
    }
    // A run that stopped on violations may have certified no box at all; the
    // smallest sampled value is the only bound worth reporting then.
    if (!std::isfinite(rep.rigorous_lower_bound)) {
        rep.rigorous_lower_bound = rep.min_sample_value;
    }
    return rep;
}

inline CertificationReport certify_nonneg(InequalityId id, const ExponentPair& e,
                                          double eps = 1e-9, int max_depth = 48,
                                          bool parallel = true) {
    return certify_nonneg(id, e, default_box(id, e), eps, max_depth, parallel);
}

}  // namespace riesz
