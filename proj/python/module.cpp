#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "tridom/bounds.hpp"
#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"
#include "tridom/patterns.hpp"
#include "tridom/render.hpp"
#include "tridom/solver.hpp"

namespace py = pybind11;

namespace {

using namespace tridom;
using PyPoint = std::pair<int, int>;

Point to_point(PyPoint p) { return {p.first, p.second}; }

std::vector<PyPoint> from_points(const PointSet& pts) {
    std::vector<PyPoint> out;
    out.reserve(pts.size());
    for (const Point p : pts) out.emplace_back(p.m, p.n);
    return out;
}

PointSet to_points(const std::vector<PyPoint>& pts) {
    PointSet out;
    out.reserve(pts.size());
    for (const PyPoint p : pts) out.push_back(to_point(p));
    return out;
}

py::dict solve_dict(const SolveResult& res) {
    py::dict d;
    d["status"] = to_string(res.status);
    d["value"] = res.value;
    d["witness"] = from_points(res.witness);
    d["nodes"] = res.nodes;
    d["lower_bound"] = res.lower_bound;
    return d;
}

}  // namespace

PYBIND11_MODULE(tridom, m) {
    m.doc() = "(t,r) broadcast domination on the triangular grid";

    m.def(
        "graph_distance",
        [](PyPoint u, PyPoint v) { return graph_distance(to_point(u), to_point(v)); },
        py::arg("u"), py::arg("v"));
    m.def(
        "bfs_distance",
        [](PyPoint u, PyPoint v, int cap) {
            return bfs_distance(to_point(u), to_point(v), cap);
        },
        py::arg("u"), py::arg("v"), py::arg("cap") = 64);
    m.def(
        "ball", [](PyPoint v, int t) { return from_points(ball(to_point(v), t)); },
        py::arg("v"), py::arg("t"));
    m.def("ball_size", &ball_size, py::arg("t"));
    m.def("reach_area", &reach_area, py::arg("t"));
    m.def("triangular", &triangular, py::arg("k"));
    m.def(
        "matchstick", [](int n) { return from_points(matchstick(n).points); }, py::arg("n"));
    m.def("matchstick_size", &matchstick_size, py::arg("n"));
    m.def("interior_edge_count", &interior_edge_count, py::arg("n"));

    m.def(
        "reception",
        [](PyPoint u, const std::vector<PyPoint>& towers, int t) {
            return reception(to_point(u), to_points(towers), t);
        },
        py::arg("u"), py::arg("towers"), py::arg("t"));
    m.def(
        "dominates",
        [](int n, const std::vector<PyPoint>& towers, int t, int r) {
            return dominates(matchstick(n).points, to_points(towers), {t, r});
        },
        py::arg("n"), py::arg("towers"), py::arg("t"), py::arg("r"));

    m.def(
        "pattern_towers",
        [](int t, int r, int half_width, bool mirror) {
            const Params p{t, r};
            const PatternLattice pl = mirror ? mirror_pattern(p) : pattern(p);
            return from_points(enumerate(pl, Window{half_width, t, {0, 0}}));
        },
        py::arg("t"), py::arg("r"), py::arg("half_width"), py::arg("mirror") = false);
    m.def(
        "pattern_basis",
        [](int t, int r, bool mirror) {
            const PatternLattice pl = mirror ? mirror_pattern({t, r}) : pattern({t, r});
            return std::make_pair(PyPoint{pl.v1.m, pl.v1.n}, PyPoint{pl.v2.m, pl.v2.n});
        },
        py::arg("t"), py::arg("r"), py::arg("mirror") = false);
    m.def(
        "is_efficient",
        [](int t, int r, int half_width, bool mirror) {
            const Params p{t, r};
            const PatternLattice pl = mirror ? mirror_pattern(p) : pattern(p);
            const Window w{half_width, t, {0, 0}};
            return is_efficient_window(enumerate(pl, w), p, w).efficient;
        },
        py::arg("t"), py::arg("r"), py::arg("half_width"), py::arg("mirror") = false);
    m.def(
        "vertices_per_tower", [](int t, int r) { return vertices_per_tower({t, r}); },
        py::arg("t"), py::arg("r"));
    m.def(
        "axis_period", [](int t, int r) { return axis_period({t, r}); }, py::arg("t"),
        py::arg("r"));

    m.def("lower_bound_t1", &lower_bound_t1, py::arg("n"), py::arg("t"));
    m.def("exact_small_t1", &exact_small_t1, py::arg("n"), py::arg("t"));
    m.def("upper_odd_t", &upper_odd_t, py::arg("ell"), py::arg("t"));
    m.def("upper_31", &upper_31, py::arg("n"));
    m.def(
        "table_supported", [](int t, int r) { return table_supported({t, r}); }, py::arg("t"),
        py::arg("r"));
    m.def(
        "table_upper", [](int t, int r, int n) { return table_upper({t, r}, n); },
        py::arg("t"), py::arg("r"), py::arg("n"));
    m.def(
        "witness", [](int t, int r, int n) { return from_points(witness({t, r}, n)); },
        py::arg("t"), py::arg("r"), py::arg("n"));

    m.def(
        "solve",
        [](int n, int t, int r, std::optional<int> k, std::uint64_t budget) {
            SolveInstance inst;
            inst.n = n;
            inst.params = {t, r};
            inst.target_k = k;
            inst.node_budget = budget;
            return solve_dict(solve(inst));
        },
        py::arg("n"), py::arg("t"), py::arg("r"), py::arg("k") = std::nullopt,
        py::arg("budget") = 0);

    m.def(
        "render_ascii",
        [](int n, const std::vector<PyPoint>& towers, int t, int r, bool reception) {
            RenderSpec spec;
            spec.region = matchstick(n);
            spec.towers = to_points(towers);
            spec.params = {t, r};
            spec.show.reception_values = reception;
            return render_ascii(spec);
        },
        py::arg("n"), py::arg("towers"), py::arg("t"), py::arg("r"),
        py::arg("reception") = false);
}
