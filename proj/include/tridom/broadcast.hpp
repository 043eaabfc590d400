#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tridom/lattice.hpp"

namespace tridom {

struct Params {
    int t = 1;
    int r = 1;
};

inline bool params_valid(Params p) { return p.t >= p.r && p.r >= 1; }

struct ReceptionField {
    Params params;
    PointSet region;              // row-major
    std::vector<int> values;      // aligned with region
};

// Sum of max(0, t - d(u, v)) over towers v.
int reception(Point u, const PointSet& towers, int t);

ReceptionField reception_field(const PointSet& region, const PointSet& towers, Params p);

bool dominates(const PointSet& region, const PointSet& towers, Params p);

struct EfficiencyViolation {
    Point vertex;
    char clause = 'a';            // 'a': far-vertex reception, 'b': near-tower rule
    std::string detail;
};

struct EfficiencyReport {
    bool efficient = true;
    std::optional<EfficiencyViolation> violation;
};

// Checks the efficiency conditions on the window core, scanning row-major:
// (a) a vertex with no tower closer than t-r must receive exactly r;
// (b) a vertex with some tower at distance d < t-r must have exactly one
//     such tower and receive exactly t-d.
// Caller supplies every tower within distance t of the core (margin >= t).
EfficiencyReport is_efficient_window(const PointSet& towers, Params p, const Window& w);

struct WasteEntry {
    Point vertex;
    int waste = 0;      // max(0, reception - r)
    bool innate = false;  // some tower lies within distance t-r
};

std::vector<WasteEntry> waste_profile(const PointSet& region, const PointSet& towers, Params p);

}  // namespace tridom
