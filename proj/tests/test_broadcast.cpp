#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tridom/broadcast.hpp"
#include "tridom/patterns.hpp"

using namespace tridom;

TEST_CASE("reception around a single strength-3 tower") {
    const PointSet towers = {{1, 2}};
    CHECK(reception({1, 2}, towers, 3) == 3);
    for (const Point u : {Point{0, 1}, Point{1, 1}, Point{0, 2}, Point{2, 2}, Point{1, 3},
                          Point{2, 3}})
        CHECK(reception(u, towers, 3) == 2);
    CHECK(reception({0, 0}, towers, 3) == 1);
    CHECK(reception({3, 3}, towers, 3) == 1);
    CHECK(reception({4, 2}, towers, 3) == 0);
    CHECK(reception({-2, 2}, towers, 3) == 0);
}

TEST_CASE("reception is additive over towers and translation-equivariant") {
    const PointSet a = {{0, 0}, {4, 1}};
    const PointSet b = {{-2, 3}};
    PointSet both = a;
    both.insert(both.end(), b.begin(), b.end());
    for (int m = -3; m <= 5; ++m)
        for (int n = -3; n <= 5; ++n) {
            const Point u{m, n};
            CHECK(reception(u, both, 4) == reception(u, a, 4) + reception(u, b, 4));
            PointSet shifted;
            for (const Point v : both) shifted.push_back(v + Point{5, -2});
            CHECK(reception(u + Point{5, -2}, shifted, 4) == reception(u, both, 4));
        }
}

TEST_CASE("reception field is row-major and aligned") {
    const PointSet region = matchstick(3).points;
    const PointSet towers = {{1, 2}};
    const ReceptionField f = reception_field(region, towers, {3, 1});
    CHECK(f.region.size() == region.size());
    CHECK(std::is_sorted(f.region.begin(), f.region.end(), RowMajorLess{}));
    CHECK(f.values.size() == f.region.size());
    for (std::size_t i = 0; i < f.region.size(); ++i)
        CHECK(f.values[i] == reception(f.region[i], towers, 3));
    CHECK(f.values[static_cast<std::size_t>(matchstick_index({1, 2}, 3))] == 3);
}

TEST_CASE("domination threshold and monotonicity in r") {
    const PointSet region = matchstick(3).points;
    CHECK(dominates(region, {{1, 2}}, {3, 1}));
    CHECK(!dominates(region, {{1, 2}}, {3, 2}));     // corners only hear 1
    CHECK(!dominates(region, {}, {3, 1}));
    CHECK(dominates(region, {{1, 2}, {0, 0}, {3, 3}, {0, 3}}, {3, 2}));
}

TEST_CASE("efficiency: the periodic pattern passes, a damaged one fails") {
    const Params p{2, 1};
    const Window w{8, 2, {0, 0}};
    PointSet towers = enumerate(pattern(p), w);
    CHECK(is_efficient_window(towers, p, w).efficient);

    PointSet damaged = towers;
    damaged.erase(std::find(damaged.begin(), damaged.end(), Point{0, 0}));
    const EfficiencyReport rep = is_efficient_window(damaged, p, w);
    CHECK(!rep.efficient);
    REQUIRE(rep.violation.has_value());
    CHECK(rep.violation->clause == 'a');
}

TEST_CASE("efficiency: every vertex a tower is efficient for unit parameters") {
    const Params p{1, 1};
    const Window w{4, 1, {0, 0}};
    CHECK(is_efficient_window(window_extended(w), p, w).efficient);
}

TEST_CASE("efficiency check rejects a margin smaller than t") {
    const Window w{4, 1, {0, 0}};
    CHECK_THROWS(is_efficient_window({{0, 0}}, {3, 1}, w));
}

TEST_CASE("efficiency: doubled pattern violates the near-tower clause") {
    const Params p{3, 1};
    const Window w{6, 3, {0, 0}};
    PointSet towers = enumerate(pattern(p), w);
    towers.push_back({1, 0});  // a second tower adjacent to the origin tower
    std::sort(towers.begin(), towers.end());
    const EfficiencyReport rep = is_efficient_window(towers, p, w);
    CHECK(!rep.efficient);
    REQUIRE(rep.violation.has_value());
}

TEST_CASE("waste profile separates innate waste at towers from overlap waste") {
    const Params p{3, 2};
    const PointSet region = matchstick(2).points;

    const auto profile = waste_profile(region, {{1, 1}}, p);
    for (const WasteEntry& e : profile) {
        if (e.vertex == Point{1, 1}) {
            CHECK(e.waste == 1);  // hears 3, needs 2
            CHECK(e.innate);
        } else {
            CHECK(!e.innate);  // nothing else is within t - r
        }
    }

    // Two adjacent towers overlap: a neighbor of both hears 2 + 2.
    const auto crowded = waste_profile(region, {{1, 1}, {1, 2}}, p);
    for (const WasteEntry& e : crowded)
        if (e.vertex == Point{0, 1}) CHECK(e.waste == 2);
    CHECK(std::is_sorted(crowded.begin(), crowded.end(),
                         [](const WasteEntry& a, const WasteEntry& b) {
                             return RowMajorLess{}(a.vertex, b.vertex);
                         }));
}
