#include "tridom/solver.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <chrono>
#include <climits>
#include <stdexcept>
#include <unordered_map>

namespace tridom {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::optimal: return "optimal";
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

namespace {

// Largest deficit reduction any single tower can achieve: the center plus
// rings of 6d vertices at distance d, each vertex capped at r.
long long contribution_cap(Params p) {
    long long cap = std::min(p.r, p.t);
    for (int d = 1; d < p.t; ++d) cap += 6LL * d * std::min(p.r, p.t - d);
    return cap;
}

struct Cover {
    int idx;  // vertex or candidate index
    int w;    // t - d
};

struct SearchCtx {
    int n = 0;
    Params p;
    int V = 0;
    std::vector<Point> pts;                    // row-major
    std::vector<std::vector<Cover>> cover;     // candidate -> (vertex, w)
    std::vector<std::vector<Cover>> coverers;  // vertex -> (candidate, w)
    long long cap = 1;

    std::vector<int> deficit;
    long long total = 0;
    std::vector<char> banned;
    std::vector<char> in_set;
    std::vector<int> chosen;
    std::vector<int> solution;  // snapshot on success
    bool found = false;

    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;  // 0 = unlimited
    bool aborted = false;

    std::vector<std::array<int, 6>> sym;  // vertex -> six symmetric images

    // epoch-stamped scratch (dominance checks, orbit gains)
    std::vector<int> stamp_val;
    std::vector<int> stamp_epoch;
    int epoch = 0;
};

SearchCtx build_ctx(int n, Params p) {
    SearchCtx c;
    c.n = n;
    c.p = p;
    c.pts = matchstick(n).points;
    c.V = static_cast<int>(c.pts.size());
    c.cap = contribution_cap(p);
    c.cover.resize(c.V);
    c.coverers.resize(c.V);
    for (int i = 0; i < c.V; ++i)
        for (const Point q : ball(c.pts[i], p.t)) {
            if (!matchstick_contains(q, n)) continue;
            c.cover[i].push_back({matchstick_index(q, n), p.t - graph_distance(c.pts[i], q)});
        }
    for (int i = 0; i < c.V; ++i)
        for (const Cover& cv : c.cover[i]) c.coverers[cv.idx].push_back({i, cv.w});
    c.deficit.assign(c.V, p.r);
    c.total = static_cast<long long>(p.r) * c.V;
    c.banned.assign(c.V, 0);
    c.in_set.assign(c.V, 0);
    c.sym.resize(c.V);
    for (int i = 0; i < c.V; ++i)
        for (int g = 0; g < 6; ++g)
            c.sym[i][g] = matchstick_index(matchstick_symmetry(g, c.pts[i], n), n);
    c.stamp_val.assign(c.V, 0);
    c.stamp_epoch.assign(c.V, 0);
    return c;
}

void apply(SearchCtx& c, int h, std::vector<int>& reds) {
    reds.clear();
    reds.reserve(c.cover[h].size());
    for (const Cover& cv : c.cover[h]) {
        const int red = std::min(c.deficit[cv.idx], cv.w);
        c.deficit[cv.idx] -= red;
        c.total -= red;
        reds.push_back(red);
    }
    c.in_set[h] = 1;
    c.chosen.push_back(h);
}

void undo(SearchCtx& c, int h, const std::vector<int>& reds) {
    for (std::size_t i = 0; i < c.cover[h].size(); ++i) {
        c.deficit[c.cover[h][i].idx] += reds[i];
        c.total += reds[i];
    }
    c.in_set[h] = 0;
    c.chosen.pop_back();
}

long long gain_of(const SearchCtx& c, int h) {
    long long g = 0;
    for (const Cover& cv : c.cover[h]) g += std::min(c.deficit[cv.idx], cv.w);
    return g;
}

// Max-deficit vertex, ties by fewest available coverers then lowest index.
int pick_branch_vertex(const SearchCtx& c) {
    int best_def = 0;
    for (int v = 0; v < c.V; ++v) best_def = std::max(best_def, c.deficit[v]);
    if (best_def == 0) return -1;
    int best = -1, best_helpers = INT_MAX;
    for (int v = 0; v < c.V; ++v) {
        if (c.deficit[v] != best_def) continue;
        int helpers = 0;
        for (const Cover& cv : c.coverers[v])
            if (!c.banned[cv.idx] && !c.in_set[cv.idx]) ++helpers;
        if (helpers < best_helpers) {
            best = v;
            best_helpers = helpers;
        }
    }
    return best;
}

struct Helper {
    int idx;
    long long gain;
};

// With candidate a's contributions stamped at the current epoch, true if
// a's capped coverage is pointwise >= b's on positive-deficit vertices.
bool stamped_covers(SearchCtx& c, int b) {
    for (const Cover& cv : c.cover[b]) {
        const int def = c.deficit[cv.idx];
        if (def == 0) continue;
        const int wa = c.stamp_epoch[cv.idx] == c.epoch ? c.stamp_val[cv.idx] : 0;
        if (std::min(def, wa) < std::min(def, cv.w)) return false;
    }
    return true;
}

void stamp_cover(SearchCtx& c, int a) {
    ++c.epoch;
    for (const Cover& cv : c.cover[a]) {
        c.stamp_val[cv.idx] = cv.w;
        c.stamp_epoch[cv.idx] = c.epoch;
    }
}

constexpr std::size_t kDominanceDepth = 3;

// Depth-first feasibility search for a dominating completion using at
// most k more towers.  Sets c.found / c.solution on success.
bool dfs(SearchCtx& c, int k) {
    if (c.total == 0) {
        c.solution = c.chosen;
        c.found = true;
        return true;
    }
    if (k <= 0) return false;
    if (c.budget != 0 && c.nodes >= c.budget) {
        c.aborted = true;
        return false;
    }
    ++c.nodes;
    if ((c.total + c.cap - 1) / c.cap > k) return false;

    const int u = pick_branch_vertex(c);
    assert(u >= 0);

    std::vector<Helper> helpers;
    helpers.reserve(c.coverers[u].size());
    for (const Cover& cv : c.coverers[u]) {
        if (c.banned[cv.idx] || c.in_set[cv.idx]) continue;
        helpers.push_back({cv.idx, gain_of(c, cv.idx)});
    }
    if (helpers.empty()) return false;
    std::sort(helpers.begin(), helpers.end(), [](const Helper& a, const Helper& b) {
        if (a.gain != b.gain) return a.gain > b.gain;
        return a.idx < b.idx;
    });

    // At the root, keep one branch per orbit of the stabilizer of u.
    if (c.chosen.empty()) {
        std::vector<int> stab;
        for (int g = 0; g < 6; ++g)
            if (c.sym[u][g] == u) stab.push_back(g);
        if (stab.size() > 1) {
            std::vector<Helper> kept;
            for (const Helper& h : helpers) {
                int canon = h.idx;
                for (const int g : stab) canon = std::min(canon, c.sym[h.idx][g]);
                if (canon == h.idx) kept.push_back(h);
            }
            helpers = std::move(kept);
        }
    }

    // Equal-cost dominance near the root: drop helpers whose capped
    // coverage another helper matches everywhere it matters.
    if (c.chosen.size() <= kDominanceDepth && helpers.size() > 1) {
        std::vector<char> dead(helpers.size(), 0);
        for (std::size_t i = 0; i < helpers.size(); ++i) {
            if (dead[i]) continue;
            stamp_cover(c, helpers[i].idx);
            for (std::size_t j = i + 1; j < helpers.size(); ++j) {
                if (dead[j]) continue;
                if (stamped_covers(c, helpers[j].idx)) dead[j] = 1;
            }
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < helpers.size(); ++i)
            if (!dead[i]) helpers[out++] = helpers[i];
        helpers.resize(out);
    }

    std::vector<int> reds;
    std::vector<int> banned_here;
    bool ok = false;
    for (const Helper& h : helpers) {
        apply(c, h.idx, reds);
        ok = dfs(c, k - 1);
        undo(c, h.idx, reds);
        if (ok || c.aborted) break;
        c.banned[h.idx] = 1;
        banned_here.push_back(h.idx);
    }
    for (const int b : banned_here) c.banned[b] = 0;
    return ok;
}

// ---- symmetric-orbit incumbent search ------------------------------------

struct Orbits {
    std::vector<std::vector<int>> members;  // orbit -> sorted vertex indices
    std::vector<int> orbit_of;              // vertex -> orbit
};

Orbits build_orbits(const SearchCtx& c) {
    Orbits o;
    o.orbit_of.assign(c.V, -1);
    for (int v = 0; v < c.V; ++v) {
        if (o.orbit_of[v] != -1) continue;
        std::vector<int> orb;
        for (int g = 0; g < 6; ++g) orb.push_back(c.sym[v][g]);
        std::sort(orb.begin(), orb.end());
        orb.erase(std::unique(orb.begin(), orb.end()), orb.end());
        const int id = static_cast<int>(o.members.size());
        for (const int w : orb) o.orbit_of[w] = id;
        o.members.push_back(std::move(orb));
    }
    return o;
}

struct SymCtx {
    SearchCtx* c = nullptr;
    const Orbits* orbits = nullptr;
    std::vector<char> orbit_banned;
    std::vector<char> orbit_in;
    std::vector<int> chosen_orbits;
    std::vector<int> solution;  // vertex indices
    bool found = false;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool aborted = false;
};

// Capped reduction achieved by adding the whole orbit, via the epoch
// overlay so the real deficits stay untouched.
long long orbit_gain(SymCtx& s, int oid) {
    SearchCtx& c = *s.c;
    ++c.epoch;
    long long gain = 0;
    for (const int h : s.orbits->members[oid])
        for (const Cover& cv : c.cover[h]) {
            int& used = c.stamp_val[cv.idx];
            if (c.stamp_epoch[cv.idx] != c.epoch) {
                c.stamp_epoch[cv.idx] = c.epoch;
                used = 0;
            }
            const int red = std::min(c.deficit[cv.idx] - used, cv.w);
            if (red > 0) {
                gain += red;
                used += red;
            }
        }
    return gain;
}

bool dfs_sym(SymCtx& s, int k) {
    SearchCtx& c = *s.c;
    if (c.total == 0) {
        s.solution.clear();
        for (const int oid : s.chosen_orbits)
            for (const int h : s.orbits->members[oid]) s.solution.push_back(h);
        s.found = true;
        return true;
    }
    if (k <= 0) return false;
    if (s.budget != 0 && s.nodes >= s.budget) {
        s.aborted = true;
        return false;
    }
    ++s.nodes;
    if ((c.total + c.cap - 1) / c.cap > k) return false;

    const int u = pick_branch_vertex(c);
    assert(u >= 0);

    std::vector<int> oids;
    for (const Cover& cv : c.coverers[u]) {
        const int oid = s.orbits->orbit_of[cv.idx];
        if (s.orbit_banned[oid] || s.orbit_in[oid]) continue;
        if (std::find(oids.begin(), oids.end(), oid) == oids.end()) oids.push_back(oid);
    }
    if (oids.empty()) return false;

    std::vector<std::pair<long long, int>> order;  // (-gain, oid)
    order.reserve(oids.size());
    for (const int oid : oids) order.emplace_back(-orbit_gain(s, oid), oid);
    std::sort(order.begin(), order.end());

    std::vector<int> banned_here;
    std::vector<int> reds;
    bool ok = false;
    for (const auto& [neg_gain, oid] : order) {
        const auto& mem = s.orbits->members[oid];
        if (static_cast<int>(mem.size()) > k) continue;
        std::vector<std::vector<int>> all_reds;
        all_reds.reserve(mem.size());
        for (const int h : mem) {
            apply(c, h, reds);
            all_reds.push_back(reds);
        }
        s.orbit_in[oid] = 1;
        s.chosen_orbits.push_back(oid);
        ok = dfs_sym(s, k - static_cast<int>(mem.size()));
        s.chosen_orbits.pop_back();
        s.orbit_in[oid] = 0;
        for (int i = static_cast<int>(mem.size()) - 1; i >= 0; --i) undo(c, mem[i], all_reds[i]);
        if (ok || s.aborted) break;
        s.orbit_banned[oid] = 1;
        banned_here.push_back(oid);
    }
    for (const int b : banned_here) s.orbit_banned[b] = 0;
    return ok;
}

// Searches dihedrally symmetric tower sets of size <= k.  A failure
// proves nothing; successes are used as incumbents only.
std::optional<std::vector<int>> symmetric_incumbent(SearchCtx& c, const Orbits& orbits, int k,
                                                    std::uint64_t budget, std::uint64_t& nodes) {
    SymCtx s;
    s.c = &c;
    s.orbits = &orbits;
    s.orbit_banned.assign(orbits.members.size(), 0);
    s.orbit_in.assign(orbits.members.size(), 0);
    s.budget = budget;
    const bool ok = dfs_sym(s, k);
    nodes += s.nodes;
    if (!ok) return std::nullopt;
    std::sort(s.solution.begin(), s.solution.end());
    return s.solution;
}

PointSet to_points(const SearchCtx& c, const std::vector<int>& idxs) {
    PointSet out;
    out.reserve(idxs.size());
    for (const int i : idxs) out.push_back(c.pts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

constexpr std::uint64_t kSymSearchBudget = 300000;

}  // namespace

PointSet greedy_incumbent(int n, Params p) {
    if (!params_valid(p) || n < 0) throw std::invalid_argument("greedy_incumbent: bad instance");
    SearchCtx c = build_ctx(n, p);
    PointSet towers;
    std::vector<int> reds;
    while (c.total > 0) {
        int best = -1;
        long long best_gain = -1;
        for (int h = 0; h < c.V; ++h) {
            if (c.in_set[h]) continue;
            const long long g = gain_of(c, h);
            if (g > best_gain || (g == best_gain && best != -1 && c.pts[h] < c.pts[best])) {
                best = h;
                best_gain = g;
            }
        }
        assert(best >= 0 && best_gain > 0);
        apply(c, best, reds);
        towers.push_back(c.pts[best]);
    }
    std::sort(towers.begin(), towers.end());
    return towers;
}

PointSet prune_towers(const PointSet& region, const PointSet& towers, Params p) {
    if (!params_valid(p)) throw std::invalid_argument("prune_towers: need t >= r >= 1");
    std::unordered_map<Point, int, PointHash> rec;
    rec.reserve(region.size() * 2);
    for (const Point u : region) rec.emplace(u, 0);
    PointSet current = towers;
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    for (const Point w : current)
        for (const Point u : ball(w, p.t)) {
            auto it = rec.find(u);
            if (it != rec.end()) it->second += p.t - graph_distance(u, w);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        PointSet sweep = current;  // removal attempts in descending (m, n)
        std::sort(sweep.rbegin(), sweep.rend());
        for (const Point w : sweep) {
            bool removable = true;
            for (const Point u : ball(w, p.t)) {
                auto it = rec.find(u);
                if (it != rec.end() && it->second - (p.t - graph_distance(u, w)) < p.r) {
                    removable = false;
                    break;
                }
            }
            if (!removable) continue;
            current.erase(std::find(current.begin(), current.end(), w));
            for (const Point u : ball(w, p.t)) {
                auto it = rec.find(u);
                if (it != rec.end()) it->second -= p.t - graph_distance(u, w);
            }
            changed = true;
        }
    }
    return current;
}

int deficit_lower_bound(const PointSet& partial, int n, Params p) {
    if (!params_valid(p) || n < 0) throw std::invalid_argument("deficit_lower_bound: bad instance");
    long long total = 0;
    for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= k; ++m)
            total += std::max(0, p.r - reception({m, k}, partial, p.t));
    const long long cap = contribution_cap(p);
    return static_cast<int>((total + cap - 1) / cap);
}

SolveResult solve(const SolveInstance& inst) {
    if (!params_valid(inst.params) || inst.n < 0)
        throw std::invalid_argument("solve: bad instance");
    if (inst.target_k.has_value() && *inst.target_k < 0)
        throw std::invalid_argument("solve: feasibility target must be >= 0");

    const auto start = std::chrono::steady_clock::now();
    const auto finish = [&start](SolveResult res) {
        res.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return res;
    };

    SearchCtx c = build_ctx(inst.n, inst.params);
    c.budget = inst.node_budget;
    const int lb0 = static_cast<int>((c.total + c.cap - 1) / c.cap);
    const MatchstickRegion region = matchstick(inst.n);

    PointSet incumbent =
        prune_towers(region.points, greedy_incumbent(inst.n, inst.params), inst.params);
    const Orbits orbits = build_orbits(c);

    SolveResult res;
    res.lower_bound = lb0;

    if (inst.target_k.has_value()) {
        const int k = *inst.target_k;
        if (static_cast<int>(incumbent.size()) <= k) {
            res.status = SolveStatus::feasible;
            res.value = static_cast<int>(incumbent.size());
            res.witness = incumbent;
            return finish(res);
        }
        if (lb0 > k) {
            res.status = SolveStatus::infeasible;
            return finish(res);
        }
        const auto sym = symmetric_incumbent(c, orbits, k, kSymSearchBudget, c.nodes);
        if (sym.has_value()) {
            res.status = SolveStatus::feasible;
            res.witness = to_points(c, *sym);
            res.value = static_cast<int>(res.witness.size());
            res.nodes = c.nodes;
            return finish(res);
        }
        const bool ok = dfs(c, k);
        res.nodes = c.nodes;
        if (ok) {
            res.status = SolveStatus::feasible;
            res.witness = to_points(c, c.solution);
            res.value = static_cast<int>(res.witness.size());
        } else if (c.aborted) {
            res.status = SolveStatus::budget_exhausted;
            res.value = static_cast<int>(incumbent.size());
            res.witness = incumbent;
        } else {
            res.status = SolveStatus::infeasible;
            res.lower_bound = k + 1;
        }
        return finish(res);
    }

    // Optimize: tighten the incumbent with symmetric sets, then iterate
    // feasibility levels upward from the lower bound.
    while (static_cast<int>(incumbent.size()) - 1 >= lb0) {
        const auto sym = symmetric_incumbent(c, orbits, static_cast<int>(incumbent.size()) - 1,
                                             kSymSearchBudget, c.nodes);
        if (!sym.has_value()) break;
        incumbent = to_points(c, *sym);
    }

    for (int k = lb0; k < static_cast<int>(incumbent.size()); ++k) {
        c.found = false;
        const bool ok = dfs(c, k);
        if (ok) {
            res.status = SolveStatus::optimal;
            res.witness = to_points(c, c.solution);
            res.value = static_cast<int>(res.witness.size());
            res.lower_bound = res.value;
            res.nodes = c.nodes;
            return finish(res);
        }
        if (c.aborted) {
            res.status = SolveStatus::budget_exhausted;
            res.value = static_cast<int>(incumbent.size());
            res.witness = incumbent;
            res.lower_bound = k;
            res.nodes = c.nodes;
            return finish(res);
        }
        res.lower_bound = k + 1;
    }
    res.status = SolveStatus::optimal;
    res.value = static_cast<int>(incumbent.size());
    res.witness = incumbent;
    res.lower_bound = res.value;
    res.nodes = c.nodes;
    return finish(res);
}

}  // namespace tridom
