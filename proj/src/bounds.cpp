#include "tridom/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "tridom/patterns.hpp"
#include "tridom/solver.hpp"

namespace tridom {

long long lower_bound_t1(int n, int t) {
    if (n < 1 || t < 2) throw std::invalid_argument("lower_bound_t1: need n >= 1, t >= 2");
    const long long verts = matchstick_size(n);
    const long long per = ball_size(t);
    return (verts + per - 1) / per;
}

std::optional<int> exact_small_t1(int n, int t) {
    if (n < 1 || t < 2) throw std::invalid_argument("exact_small_t1: need n >= 1, t >= 2");
    if (n <= 3 * (t - 1) / 2) return 1;
    if (n <= 2 * (t - 1)) return 2;
    if (n <= 3 * t - 2) return 3;
    return std::nullopt;
}

std::pair<int, long long> upper_odd_t(int ell, int t) {
    if (t % 2 == 0) throw std::invalid_argument("upper_odd_t: t must be odd");
    if (ell <= 1 || t < 3) throw std::invalid_argument("upper_odd_t: need ell > 1, t >= 3");
    return {ell * (2 * (t - 1) - t / 2), triangular(ell)};
}

long long upper_31(int n) {
    if (n < 1) throw std::invalid_argument("upper_31: need n >= 1");
    return triangular(n / 4 + 1);
}

bool table_supported(Params p) {
    if (!params_valid(p)) return false;
    if (p.t == p.r) return true;
    static constexpr std::array<std::pair<int, int>, 6> rows{
        {{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}}};
    for (const auto& [t, r] : rows)
        if (p.t == t && p.r == r) return true;
    return false;
}

long long table_upper(Params p, int n) {
    if (!table_supported(p)) throw std::invalid_argument("table_upper: unsupported (t, r)");
    if (n < 1) throw std::invalid_argument("table_upper: need n >= 1");
    const int ell = axis_period(p);
    const long long k = n / ell;
    const bool exact_multiple = n % ell == 0;
    const long long kk = exact_multiple ? k : k + 1;
    if (p.t == p.r) return 3 * kk;
    if (p.t == 2 && p.r == 1) return 3 * kk * (kk + 2);
    if (p.t == 3 && p.r == 1) return 9 * kk * (kk + 1);
    if (p.t == 3 && p.r == 2) return 3 * kk * (2 * kk + 3);
    if (p.t == 4 && p.r == 1) return 6 * kk * (3 * kk + 2);
    if (p.t == 4 && p.r == 2) return 3 * kk * (kk + 2);
    return 2 * kk * (5 * kk + 6);  // (4, 3)
}

namespace {

long long per_tile_count(Params p) {
    if (p.t == p.r) return 3;
    if (p.t == 2) return 9;
    if (p.t == 3 && p.r == 1) return 18;
    if (p.t == 3 && p.r == 2) return 15;
    if (p.t == 4 && p.r == 1) return 30;
    if (p.t == 4 && p.r == 2) return 9;
    return 22;  // (4, 3)
}

// Fast domination check on T_n via an indexed reception array.
bool dominates_matchstick(int n, const PointSet& towers, Params p) {
    std::vector<int> rec(static_cast<std::size_t>(matchstick_size(n)), 0);
    for (const Point w : towers)
        for (const Point u : ball(w, p.t))
            if (matchstick_contains(u, n))
                rec[matchstick_index(u, n)] += p.t - graph_distance(u, w);
    for (const int v : rec)
        if (v < p.r) return false;
    return true;
}

// Pattern towers near T_n, clamped onto it: the assembled candidate set.
PointSet clamped_pattern_set(const PatternLattice& pl, Point shift, int n, int margin) {
    const int lo = -margin - 1;
    const int hi = n + margin + 1;
    Window box;
    box.center = {(lo + hi) / 2, (lo + hi) / 2};
    box.half_width = hi - (lo + hi) / 2 + 1;
    box.margin = 0;
    PointSet w;
    for (const Point q : enumerate_shifted(pl, shift, box)) {
        if (q.m < lo || q.m > hi || q.n < lo || q.n > hi) continue;
        const Point c = clamp_to_matchstick(q, n);
        if (graph_distance(q, c) <= margin) w.push_back(c);
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());
    return w;
}

}  // namespace

PointSet tile_template(Params p) {
    if (!table_supported(p)) throw std::invalid_argument("tile_template: unsupported (t, r)");
    const int ell = axis_period(p);
    const int count = static_cast<int>(per_tile_count(p));
    SolveInstance inst;
    inst.n = ell;
    inst.params = p;
    inst.target_k = count;
    inst.node_budget = 20000000;
    const SolveResult res = solve(inst);
    if (res.status != SolveStatus::feasible && res.status != SolveStatus::optimal)
        throw std::runtime_error("tile_template: no dominating set of the per-tile size found");
    // The search may beat the charged cardinality; pad a smaller set with
    // unused vertices (still dominating) so the size matches the accounting.
    PointSet tile = res.witness;
    for (const Point q : matchstick(ell).points) {
        if (static_cast<int>(tile.size()) == count) break;
        if (std::find(tile.begin(), tile.end(), q) == tile.end()) tile.push_back(q);
    }
    std::sort(tile.begin(), tile.end());
    return tile;
}

PointSet witness(Params p, int n) {
    if (!table_supported(p)) throw std::invalid_argument("witness: unsupported (t, r)");
    if (n < 1) throw std::invalid_argument("witness: need n >= 1");
    const int ell = axis_period(p);
    const long long bound = table_upper(p, n);
    const int margin = p.t - 1;
    const MatchstickRegion region = matchstick(n);

    PointSet best;
    bool have_best = false;
    for (const bool mirrored : {false, true}) {
        const PatternLattice pl = mirrored ? mirror_pattern(p) : pattern(p);
        for (int sx = 0; sx < ell; ++sx)
            for (int sy = 0; sy < ell; ++sy) {
                PointSet w = clamped_pattern_set(pl, {sx, sy}, n, margin);
                if (w.empty() || !dominates_matchstick(n, w, p)) continue;
                w = prune_towers(region.points, w, p);
                if (!have_best || w.size() < best.size()) {
                    best = std::move(w);
                    have_best = true;
                }
                if (have_best && static_cast<long long>(best.size()) <= bound) return best;
            }
    }

    // The sweep missed the closed-form size: try an exact search at that
    // cardinality, then settle for the best verified set.
    SolveInstance inst;
    inst.n = n;
    inst.params = p;
    inst.target_k = static_cast<int>(bound);
    inst.node_budget = 4000000;
    const SolveResult res = solve(inst);
    if (res.status == SolveStatus::feasible || res.status == SolveStatus::optimal)
        return res.witness;
    if (have_best) return best;
    return prune_towers(region.points, greedy_incumbent(n, p), p);
}

std::vector<MonotonicityViolation> monotonicity_check(
    const std::map<std::array<int, 3>, int>& values) {
    std::vector<MonotonicityViolation> out;
    for (const auto& [key, value] : values) {
        const auto [t, r, n] = key;
        const auto check = [&](std::array<int, 3> other, const std::string& relation) {
            const auto it = values.find(other);
            if (it != values.end() && value > it->second)
                out.push_back({key, other, value, it->second, relation});
        };
        check({t - 1, r, n}, "stronger transmitters never need more towers");
        check({t, r + 1, n}, "higher demand never needs fewer towers");
        check({t, r, n + 1}, "larger regions never need fewer towers");
    }
    return out;
}

BoundsReport bounds_report(Params p, int n, std::uint64_t exact_budget) {
    if (!params_valid(p)) throw std::invalid_argument("bounds_report: need t >= r >= 1");
    if (n < 0) throw std::invalid_argument("bounds_report: need n >= 0");
    BoundsReport report;
    const MatchstickRegion region = matchstick(n);

    report.lower = deficit_lower_bound({}, n, p);
    report.sources.push_back("lower: reception-counting argument");

    PointSet upper_set;
    std::string upper_source;
    if (n >= 1 && table_supported(p)) {
        upper_set = witness(p, n);
        upper_source = "upper: periodic-pattern construction";
        const long long closed = table_upper(p, n);
        std::string note = "note: period-tiling closed form gives " + std::to_string(closed);
        if (static_cast<long long>(upper_set.size()) > closed)
            note += " (no set of that size was found; reported upper is the certified one)";
        report.sources.push_back(note);
    } else {
        upper_set = prune_towers(region.points, greedy_incumbent(n, p), p);
        upper_source = "upper: pruned greedy construction";
    }
    if (p.t == 3 && p.r == 1 && n >= 1)
        report.sources.push_back("note: quarter-split closed form gives " +
                                 std::to_string(upper_31(n)));

    SolveInstance inst;
    inst.n = n;
    inst.params = p;
    inst.node_budget = exact_budget;
    const SolveResult res = solve(inst);
    if (res.status == SolveStatus::optimal) {
        report.exact = res.value;
        report.lower = res.value;
        report.upper = res.value;
        report.witness = res.witness;
        report.sources.push_back("exact: branch-and-bound search, " +
                                 std::to_string(res.nodes) + " nodes");
        return report;
    }
    report.sources.push_back("exact: search budget exhausted (" + std::to_string(res.nodes) +
                             " nodes)");
    report.lower = std::max(report.lower, static_cast<long long>(res.lower_bound));
    if (res.value >= 0 && (res.status == SolveStatus::feasible ||
                           res.status == SolveStatus::budget_exhausted) &&
        !res.witness.empty() && res.witness.size() < upper_set.size()) {
        upper_set = res.witness;
        upper_source = "upper: best incumbent from budgeted search";
    }
    report.upper = static_cast<long long>(upper_set.size());
    report.witness = upper_set;
    report.sources.push_back(upper_source);
    return report;
}

}  // namespace tridom
