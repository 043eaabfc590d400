#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace tridom {

// Integer coordinates in the (a1, a2) basis of the triangular grid,
// a1 = (1, 0), a2 = (-1/2, sqrt(3)/2).  Default ordering is
// lexicographic by (m, n); serialization sorts row-major (n, then m).
struct Point {
    int m = 0;
    int n = 0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
    friend constexpr auto operator<=>(const Point&, const Point&) = default;

    friend constexpr Point operator+(Point a, Point b) { return {a.m + b.m, a.n + b.n}; }
    friend constexpr Point operator-(Point a, Point b) { return {a.m - b.m, a.n - b.n}; }
};

struct PointHash {
    std::size_t operator()(Point p) const {
        std::uint64_t x = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.m)) << 32) |
                          static_cast<std::uint32_t>(p.n);
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

// Row-major comparator used by every serialized point list.
struct RowMajorLess {
    constexpr bool operator()(Point a, Point b) const {
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    }
};

// Sorted-unique vector of points (lexicographic by (m, n) unless stated).
using PointSet = std::vector<Point>;

inline constexpr std::array<Point, 6> kSteps{{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}}};

std::array<Point, 6> neighbors(Point p);

// Shortest-path distance in the infinite grid (closed form).
int graph_distance(Point u, Point v);

// Independent BFS oracle over the neighbor relation; returns -1 if the
// distance exceeds cap.
int bfs_distance(Point u, Point v, int cap = 64);

long long triangular(long long k);

long long ball_size(int t);               // 3t^2 - 3t + 1
PointSet ball(Point v, int t);            // all u with d(u,v) <= t-1, row-major
long long reach_area(int t);              // 6(t-1)^2 unit triangles

struct MatchstickRegion {
    int n = 0;
    PointSet points;  // row-major: {(m,k) : 0 <= m <= k <= n}
};

MatchstickRegion matchstick(int n);
long long matchstick_size(int n);         // triangular(n+1)
bool matchstick_contains(Point p, int n);
int matchstick_index(Point p, int n);     // row-major index k(k+1)/2 + m
long long interior_edge_count(int n);     // 3 * triangular(n-1)

// Nearest region vertex by graph distance; ties broken by smallest (m, n).
Point clamp_to_matchstick(Point p, int n);

// The six dihedral symmetries of T_n acting on coordinates, index 0..5
// (identity, two rotations, three reflections).
Point matchstick_symmetry(int which, Point p, int n);

// Square window centered at `center`: core is the (2L+1)^2 box, the
// extended box adds `margin` on every side.
struct Window {
    int half_width = 1;   // L
    int margin = 0;
    Point center{0, 0};
};

bool window_core_contains(const Window& w, Point p);
bool window_extended_contains(const Window& w, Point p);
PointSet window_core(const Window& w);      // row-major
PointSet window_extended(const Window& w);  // row-major

}  // namespace tridom
