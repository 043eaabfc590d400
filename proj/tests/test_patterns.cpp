#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "tridom/broadcast.hpp"
#include "tridom/patterns.hpp"

using namespace tridom;

TEST_CASE("basis vectors of the pattern and its mirror") {
    const PatternLattice pl = pattern({2, 1});
    CHECK(pl.v1 == Point{3, 2});
    CHECK(pl.v2 == Point{1, 3});
    CHECK(!pl.mirrored);
    const PatternLattice mir = mirror_pattern({2, 1});
    CHECK(mir.v1 == Point{2, 3});
    CHECK(mir.v2 == Point{3, 1});
    CHECK(mir.mirrored);
    CHECK(pattern({3, 2}).v1 == Point{4, 3});
    CHECK(pattern({3, 2}).v2 == Point{1, 4});
}

TEST_CASE("one tower per |det| vertices") {
    CHECK(vertices_per_tower({2, 1}) == 7);
    CHECK(vertices_per_tower({3, 1}) == 19);
    CHECK(vertices_per_tower({3, 2}) == 13);
    CHECK(vertices_per_tower({4, 1}) == 37);
    CHECK(vertices_per_tower({4, 2}) == 28);
    CHECK(vertices_per_tower({4, 3}) == 21);
    CHECK(vertices_per_tower({5, 5}) == 25);
}

TEST_CASE("axis periods") {
    CHECK(axis_period({2, 1}) == 7);
    CHECK(axis_period({3, 1}) == 19);
    CHECK(axis_period({3, 2}) == 13);
    CHECK(axis_period({4, 1}) == 37);
    CHECK(axis_period({4, 2}) == 14);
    CHECK(axis_period({4, 3}) == 21);
    for (int t = 1; t <= 6; ++t) CHECK(axis_period({t, t}) == t);
}

TEST_CASE("membership: the sublattice is closed and proper") {
    const PatternLattice pl = pattern({2, 1});
    CHECK(lattice_member(pl, {0, 0}));
    CHECK(lattice_member(pl, pl.v1));
    CHECK(lattice_member(pl, pl.v2));
    CHECK(lattice_member(pl, pl.v1 + pl.v2));
    CHECK(lattice_member(pl, {2 * 3 - 3 * 1, 2 * 2 - 3 * 3}));  // 2*v1 - 3*v2
    CHECK(!lattice_member(pl, {1, 0}));
    CHECK(!lattice_member(pl, {0, 1}));
    CHECK(lattice_member(pl, {7, 0}));  // the axis period
}

TEST_CASE("enumeration fills the window with exactly the lattice points") {
    const PatternLattice pl = pattern({2, 1});
    const Window w{7, 2, {0, 0}};
    const PointSet towers = enumerate(pl, w);
    CHECK(std::is_sorted(towers.begin(), towers.end(), RowMajorLess{}));
    CHECK(std::adjacent_find(towers.begin(), towers.end()) == towers.end());
    for (const Point q : {Point{0, 0}, Point{3, 2}, Point{1, 3}, Point{7, 0}})
        CHECK(std::find(towers.begin(), towers.end(), q) != towers.end());
    for (const Point q : towers) {
        CHECK(lattice_member(pl, q));
        CHECK(window_extended_contains(w, q));
    }
    // Nothing missing: every extended-box point is either listed or no member.
    for (const Point q : window_extended(w))
        CHECK(lattice_member(pl, q) ==
              (std::find(towers.begin(), towers.end(), q) != towers.end()));
}

TEST_CASE("mirrored enumeration is the coordinate swap of the original") {
    for (const Params p : {Params{2, 1}, Params{3, 2}, Params{4, 3}}) {
        const Window w{10, p.t, {0, 0}};
        const PointSet plain = enumerate(pattern(p), w);
        const PointSet mirrored = enumerate(mirror_pattern(p), w);
        std::set<std::pair<int, int>> swapped;
        for (const Point q : plain) swapped.insert({q.n, q.m});
        CHECK(swapped.size() == mirrored.size());
        for (const Point q : mirrored) CHECK(swapped.count({q.m, q.n}) == 1);
    }
}

TEST_CASE("shifted enumeration translates the lattice") {
    const PatternLattice pl = pattern({3, 2});
    const Window w{9, 3, {0, 0}};
    const PointSet shifted = enumerate_shifted(pl, {2, 1}, w);
    for (const Point q : shifted) CHECK(lattice_member(pl, q - Point{2, 1}));
    CHECK(std::find(shifted.begin(), shifted.end(), Point{2, 1}) != shifted.end());
}

TEST_CASE("tower density approaches one per |det| vertices") {
    for (const Params p : {Params{2, 1}, Params{3, 2}, Params{4, 1}}) {
        const int L = 40;
        const Window w{L, p.t, {0, 0}};
        long long in_core = 0;
        for (const Point q : enumerate(pattern(p), w))
            if (window_core_contains(w, q)) ++in_core;
        const double density = static_cast<double>(in_core) / ((2.0 * L + 1) * (2.0 * L + 1));
        const double expected = 1.0 / static_cast<double>(vertices_per_tower(p));
        CHECK(std::abs(density - expected) / expected < 0.05);
    }
}

TEST_CASE("patterns dominate the whole window core") {
    for (const Params p : {Params{2, 1}, Params{3, 1}, Params{4, 2}, Params{5, 5}}) {
        const Window w{4 * p.t, p.t, {0, 0}};
        CHECK(dominates(window_core(w), enumerate(pattern(p), w), p));
    }
}

// The reception identity behind the pattern's correctness: the row of
// vertices between towers A = (0,0), B = v1 - v2, C = v1 splits its demand
// r across A and C, and the triangle interior splits it across all three.
TEST_CASE("reception decomposition along the A-C fault line") {
    for (const Params p : {Params{3, 2}, Params{4, 3}, Params{5, 3}, Params{5, 4},
                           Params{7, 4}}) {
        const int t = p.t, r = p.r;
        const PatternLattice pl = pattern(p);
        const Window w{4 * t, t, {0, 0}};
        const PointSet towers = enumerate(pl, w);
        const Point A{0, 0};
        const Point C = pl.v1;
        const Point B = pl.v1 - pl.v2;
        for (int i = 0; i <= r - 2; ++i)
            for (int j = 0; j <= t - r; ++j) {
                const Point P{t - r + 1 + i, 1 + i + j};
                CHECK(t - graph_distance(P, A) == r - 1 - i);
                CHECK(t - graph_distance(P, C) == i + 1);
                CHECK(graph_distance(P, B) >= t);
                CHECK(reception(P, towers, t) == r);
            }
    }
}

TEST_CASE("reception decomposition inside the A-B-C triangle") {
    for (const Params p : {Params{4, 3}, Params{5, 3}, Params{5, 4}, Params{7, 4},
                           Params{8, 5}}) {
        const int t = p.t, r = p.r;
        const PatternLattice pl = pattern(p);
        const Window w{4 * t, t, {0, 0}};
        const PointSet towers = enumerate(pl, w);
        const Point A{0, 0};
        const Point C = pl.v1;
        const Point B = pl.v1 - pl.v2;
        for (int i = 0; i <= r - 3; ++i)
            for (int j = 0; j <= i; ++j) {
                const Point Q{t - r + 2 + i, 1 + j};
                CHECK(t - graph_distance(Q, A) == r - 2 - i);
                CHECK(t - graph_distance(Q, C) == 1 + j);
                CHECK(t - graph_distance(Q, B) == 1 + i - j);
                CHECK(reception(Q, towers, t) == r);
            }
    }
}
