#include "tridom/broadcast.hpp"

#include <algorithm>
#include <stdexcept>

namespace tridom {

int reception(Point u, const PointSet& towers, int t) {
    if (t < 1) throw std::invalid_argument("reception: t must be >= 1");
    int total = 0;
    for (const Point v : towers) {
        const int d = graph_distance(u, v);
        if (d < t) total += t - d;
    }
    return total;
}

ReceptionField reception_field(const PointSet& region, const PointSet& towers, Params p) {
    if (!params_valid(p)) throw std::invalid_argument("reception_field: need t >= r >= 1");
    ReceptionField field;
    field.params = p;
    field.region = region;
    std::sort(field.region.begin(), field.region.end(), RowMajorLess{});
    field.values.reserve(field.region.size());
    for (const Point u : field.region) field.values.push_back(reception(u, towers, p.t));
    return field;
}

bool dominates(const PointSet& region, const PointSet& towers, Params p) {
    if (!params_valid(p)) throw std::invalid_argument("dominates: need t >= r >= 1");
    for (const Point u : region)
        if (reception(u, towers, p.t) < p.r) return false;
    return true;
}

EfficiencyReport is_efficient_window(const PointSet& towers, Params p, const Window& w) {
    if (!params_valid(p)) throw std::invalid_argument("is_efficient_window: need t >= r >= 1");
    if (w.margin < p.t)
        throw std::invalid_argument("is_efficient_window: window margin must be >= t");
    EfficiencyReport report;
    for (const Point u : window_core(w)) {
        int total = 0;
        int near_count = 0;
        int near_dist = -1;
        for (const Point v : towers) {
            const int d = graph_distance(u, v);
            if (d < p.t) total += p.t - d;
            if (d < p.t - p.r) {
                ++near_count;
                near_dist = near_count == 1 ? d : near_dist;
            }
        }
        if (near_count == 0) {
            if (total != p.r) {
                report.efficient = false;
                report.violation = {u, 'a',
                                    "reception " + std::to_string(total) + " != required " +
                                        std::to_string(p.r)};
                return report;
            }
        } else if (near_count > 1) {
            report.efficient = false;
            report.violation = {u, 'b',
                                std::to_string(near_count) + " towers within distance " +
                                    std::to_string(p.t - p.r - 1)};
            return report;
        } else if (total != p.t - near_dist) {
            report.efficient = false;
            report.violation = {u, 'b',
                                "reception " + std::to_string(total) + " != " +
                                    std::to_string(p.t - near_dist) +
                                    " from the unique near tower"};
            return report;
        }
    }
    return report;
}

std::vector<WasteEntry> waste_profile(const PointSet& region, const PointSet& towers, Params p) {
    if (!params_valid(p)) throw std::invalid_argument("waste_profile: need t >= r >= 1");
    std::vector<WasteEntry> out;
    out.reserve(region.size());
    PointSet ordered = region;
    std::sort(ordered.begin(), ordered.end(), RowMajorLess{});
    for (const Point u : ordered) {
        WasteEntry entry;
        entry.vertex = u;
        int total = 0;
        for (const Point v : towers) {
            const int d = graph_distance(u, v);
            if (d < p.t) total += p.t - d;
            if (d < p.t - p.r) entry.innate = true;
        }
        entry.waste = std::max(0, total - p.r);
        out.push_back(entry);
    }
    return out;
}

}  // namespace tridom
