#pragma once

#include <algorithm>
#include <json.hpp>

#include "tridom/bounds.hpp"
#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"
#include "tridom/patterns.hpp"
#include "tridom/solver.hpp"

namespace tridom {

inline nlohmann::json point_json(Point p) { return nlohmann::json::array({p.m, p.n}); }

// Every serialized point list is sorted row-major (by n, then m).
inline nlohmann::json points_json(PointSet pts) {
    std::sort(pts.begin(), pts.end(), RowMajorLess{});
    nlohmann::json arr = nlohmann::json::array();
    for (const Point p : pts) arr.push_back(point_json(p));
    return arr;
}

// {"t":…, "r":…, "values":[[m,n,value],…]} sorted row-major.
inline nlohmann::json reception_field_json(const ReceptionField& f) {
    std::vector<std::size_t> order(f.region.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return RowMajorLess{}(f.region[a], f.region[b]);
    });
    nlohmann::json values = nlohmann::json::array();
    for (const std::size_t i : order)
        values.push_back(
            nlohmann::json::array({f.region[i].m, f.region[i].n, f.values[i]}));
    return {{"t", f.params.t}, {"r", f.params.r}, {"values", values}};
}

// {"t":…, "r":…, "basis":[[a,b],[c,d]], "towers":[[m,n],…]}.
inline nlohmann::json pattern_json(const PatternLattice& pl, const PointSet& towers) {
    return {{"t", pl.params.t},
            {"r", pl.params.r},
            {"basis", nlohmann::json::array({point_json(pl.v1), point_json(pl.v2)})},
            {"towers", points_json(towers)}};
}

inline nlohmann::json bounds_json(const BoundsReport& rep) {
    nlohmann::json j = {{"lower", rep.lower},
                        {"upper", rep.upper},
                        {"exact", nullptr},
                        {"witness", points_json(rep.witness)},
                        {"sources", rep.sources}};
    if (rep.exact.has_value()) j["exact"] = *rep.exact;
    return j;
}

inline nlohmann::json solve_json(const SolveResult& res) {
    return {{"status", to_string(res.status)},
            {"value", res.value},
            {"witness", points_json(res.witness)},
            {"nodes", res.nodes},
            {"lower_bound", res.lower_bound}};
}

}  // namespace tridom
