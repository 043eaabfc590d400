#include "tridom/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace tridom {

std::array<Point, 6> neighbors(Point p) {
    std::array<Point, 6> out;
    for (std::size_t i = 0; i < kSteps.size(); ++i) out[i] = p + kSteps[i];
    return out;
}

int graph_distance(Point u, Point v) {
    const int m = v.m - u.m;
    const int n = v.n - u.n;
    // Steps +-(1,0), +-(0,1) move one axis; +-(1,1) moves both together.
    if ((m >= 0 && n >= 0) || (m <= 0 && n <= 0)) return std::max(std::abs(m), std::abs(n));
    return std::abs(m) + std::abs(n);
}

int bfs_distance(Point u, Point v, int cap) {
    if (u == v) return 0;
    std::unordered_map<Point, int, PointHash> dist;
    std::deque<Point> queue;
    dist.emplace(u, 0);
    queue.push_back(u);
    while (!queue.empty()) {
        const Point p = queue.front();
        queue.pop_front();
        const int d = dist.at(p);
        if (d >= cap) continue;
        for (const Point q : neighbors(p)) {
            if (dist.contains(q)) continue;
            if (q == v) return d + 1;
            dist.emplace(q, d + 1);
            queue.push_back(q);
        }
    }
    return -1;
}

long long triangular(long long k) {
    if (k < 0) throw std::invalid_argument("triangular: negative argument");
    return k * (k + 1) / 2;
}

long long ball_size(int t) {
    if (t < 1) throw std::invalid_argument("ball_size: t must be >= 1");
    const long long tt = t;
    return 3 * tt * tt - 3 * tt + 1;
}

PointSet ball(Point v, int t) {
    if (t < 1) throw std::invalid_argument("ball: t must be >= 1");
    const int rad = t - 1;
    PointSet out;
    out.reserve(static_cast<std::size_t>(ball_size(t)));
    for (int dn = -rad; dn <= rad; ++dn)
        for (int dm = -rad; dm <= rad; ++dm) {
            const Point p{v.m + dm, v.n + dn};
            if (graph_distance(v, p) <= rad) out.push_back(p);
        }
    return out;  // row-major by construction
}

long long reach_area(int t) {
    if (t < 1) throw std::invalid_argument("reach_area: t must be >= 1");
    const long long s = t - 1;
    return 6 * s * s;
}

MatchstickRegion matchstick(int n) {
    if (n < 0) throw std::invalid_argument("matchstick: n must be >= 0");
    MatchstickRegion region;
    region.n = n;
    region.points.reserve(static_cast<std::size_t>(matchstick_size(n)));
    for (int k = 0; k <= n; ++k)
        for (int m = 0; m <= k; ++m) region.points.push_back({m, k});
    return region;
}

long long matchstick_size(int n) { return triangular(n + 1); }

bool matchstick_contains(Point p, int n) { return 0 <= p.m && p.m <= p.n && p.n <= n; }

int matchstick_index(Point p, int n) {
    assert(matchstick_contains(p, n));
    (void)n;
    return p.n * (p.n + 1) / 2 + p.m;
}

long long interior_edge_count(int n) {
    if (n < 1) throw std::invalid_argument("interior_edge_count: n must be >= 1");
    return 3 * triangular(n - 1);
}

Point clamp_to_matchstick(Point p, int n) {
    if (matchstick_contains(p, n)) return p;
    // Project coordinates into the region to get an initial radius, then
    // scan rows within that radius for the true nearest vertex.
    const int k0 = std::clamp(p.n, 0, n);
    const int m0 = std::clamp(p.m, 0, k0);
    int best_d = graph_distance(p, {m0, k0});
    Point best{m0, k0};
    const int lo = std::max(0, p.n - best_d);
    const int hi = std::min(n, p.n + best_d);
    for (int k = lo; k <= hi; ++k)
        for (int m = 0; m <= k; ++m) {
            const Point q{m, k};
            const int d = graph_distance(p, q);
            if (d < best_d || (d == best_d && q < best)) {
                best_d = d;
                best = q;
            }
        }
    return best;
}

Point matchstick_symmetry(int which, Point p, int n) {
    const int m = p.m, k = p.n;
    switch (which) {
        case 0: return {m, k};
        case 1: return {k - m, n - m};      // rotation by 120
        case 2: return {n - k, n - k + m};  // rotation by 240
        case 3: return {k - m, k};          // reflection m -> k-m
        case 4: return {m, n - k + m};      // reflection
        case 5: return {n - k, n - m};      // reflection
        default: throw std::invalid_argument("matchstick_symmetry: which must be in [0,6)");
    }
}

bool window_core_contains(const Window& w, Point p) {
    return std::abs(p.m - w.center.m) <= w.half_width && std::abs(p.n - w.center.n) <= w.half_width;
}

bool window_extended_contains(const Window& w, Point p) {
    const int reach = w.half_width + w.margin;
    return std::abs(p.m - w.center.m) <= reach && std::abs(p.n - w.center.n) <= reach;
}

static PointSet box_points(Point center, int radius) {
    PointSet out;
    const long long side = 2LL * radius + 1;
    out.reserve(static_cast<std::size_t>(side * side));
    for (int dn = -radius; dn <= radius; ++dn)
        for (int dm = -radius; dm <= radius; ++dm)
            out.push_back({center.m + dm, center.n + dn});
    return out;
}

PointSet window_core(const Window& w) { return box_points(w.center, w.half_width); }

PointSet window_extended(const Window& w) { return box_points(w.center, w.half_width + w.margin); }

}  // namespace tridom
