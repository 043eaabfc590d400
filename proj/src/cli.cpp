#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "tridom/bounds.hpp"
#include "tridom/broadcast.hpp"
#include "tridom/json_io.hpp"
#include "tridom/lattice.hpp"
#include "tridom/patterns.hpp"
#include "tridom/render.hpp"
#include "tridom/solver.hpp"

namespace {

using namespace tridom;

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 2;
    }
    f << text;
    return 0;
}

// Usage-level validation shared by every verb; exit 2 before computing.
bool check_params(int t, int r) {
    if (t < r) {
        std::cerr << "t must be ≥ r\n";
        return false;
    }
    if (r < 1) {
        std::cerr << "r must be ≥ 1\n";
        return false;
    }
    return true;
}

std::string render_region(const RenderSpec& spec, const std::string& format) {
    return format == "svg" ? render_svg(spec) : render_ascii(spec);
}

int cmd_pattern(int t, int r, int L, bool mirror, const std::string& format,
                const std::string& out) {
    if (!check_params(t, r)) return 2;
    const Params p{t, r};
    const PatternLattice pl = mirror ? mirror_pattern(p) : pattern(p);
    const Window w{L, t, {0, 0}};
    const PointSet towers = enumerate(pl, w);
    if (format == "json") return emit(pattern_json(pl, towers).dump(2) + "\n", out);
    RenderSpec spec{w, towers, p, {}};
    spec.show.reach_hexagons = format == "svg";
    spec.show.boundary = format == "svg";
    return emit(render_region(spec, format), out);
}

int cmd_verify(int t, int r, int L, bool mirror, const std::string& out) {
    if (!check_params(t, r)) return 2;
    const Params p{t, r};
    const PatternLattice pl = mirror ? mirror_pattern(p) : pattern(p);
    const Window w{L, t, {0, 0}};
    const EfficiencyReport rep = is_efficient_window(enumerate(pl, w), p, w);
    nlohmann::json j = {{"t", t}, {"r", r}, {"efficient", rep.efficient}, {"violation", nullptr}};
    if (rep.violation.has_value())
        j["violation"] = {{"vertex", point_json(rep.violation->vertex)},
                          {"clause", std::string(1, rep.violation->clause)},
                          {"detail", rep.violation->detail}};
    const int rc = emit(j.dump(2) + "\n", out);
    if (rc != 0) return rc;
    return rep.efficient ? 0 : 1;
}

int cmd_solve(int n, int t, int r, int k, std::uint64_t budget, const std::string& out) {
    if (!check_params(t, r)) return 2;
    SolveInstance inst;
    inst.n = n;
    inst.params = {t, r};
    if (k >= 0) inst.target_k = k;
    inst.node_budget = budget;
    return emit(solve_json(solve(inst)).dump(2) + "\n", out);
}

int cmd_bounds(int t, int r, int n, std::uint64_t budget, const std::string& out) {
    if (!check_params(t, r)) return 2;
    return emit(bounds_json(bounds_report({t, r}, n, budget)).dump(2) + "\n", out);
}

int cmd_render(int t, int r, int n, int L, bool use_pattern, bool use_witness,
               const std::string& towers_json, bool reception, bool reach, bool boundary,
               const std::string& format, const std::string& out) {
    if (!check_params(t, r)) return 2;
    const Params p{t, r};
    RenderSpec spec;
    if (n >= 0)
        spec.region = matchstick(n);
    else
        spec.region = Window{L, t, {0, 0}};
    spec.params = p;
    if (use_pattern) {
        const Window w = n >= 0 ? Window{n, t, {n / 2, n / 2}} : std::get<Window>(spec.region);
        spec.towers = enumerate(pattern(p), w);
    } else if (use_witness) {
        if (n < 0) {
            std::cerr << "--witness needs --n\n";
            return 2;
        }
        spec.towers = witness(p, n);
    } else if (!towers_json.empty()) {
        for (const auto& pair : nlohmann::json::parse(towers_json))
            spec.towers.push_back({pair.at(0).get<int>(), pair.at(1).get<int>()});
    }
    spec.show = {reception, reach, boundary};
    return emit(render_region(spec, format), out);
}

int cmd_selftest() {
    int failures = 0;
    const auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << name << ": " << (ok ? "ok" : "FAIL " + detail) << '\n';
        if (!ok) ++failures;
    };

    bool dist_ok = true;
    std::string dist_detail;
    for (int m = -10; m <= 10 && dist_ok; ++m)
        for (int dn = -10; dn <= 10 && dist_ok; ++dn) {
            const Point q{m, dn};
            if (graph_distance({0, 0}, q) != bfs_distance({0, 0}, q)) {
                dist_ok = false;
                dist_detail = "at offset (" + std::to_string(m) + "," + std::to_string(dn) + ")";
            }
        }
    report("distance-oracle", dist_ok, dist_detail);

    bool ball_ok = true;
    std::string ball_detail;
    for (int t = 1; t <= 8 && ball_ok; ++t) {
        if (static_cast<long long>(ball({0, 0}, t).size()) != ball_size(t)) {
            ball_ok = false;
            ball_detail = "ball size at t=" + std::to_string(t);
        }
        if (reach_area(t) != 6LL * (t - 1) * (t - 1)) {
            ball_ok = false;
            ball_detail = "reach area at t=" + std::to_string(t);
        }
    }
    report("ball-size", ball_ok, ball_detail);

    bool eff_ok = true;
    std::string eff_detail;
    for (int t = 1; t <= 5 && eff_ok; ++t)
        for (int r = 1; r <= t && eff_ok; ++r) {
            const Params p{t, r};
            const Window w{4 * t, t, {0, 0}};
            for (const bool mirror : {false, true}) {
                const PatternLattice pl = mirror ? mirror_pattern(p) : pattern(p);
                const EfficiencyReport rep = is_efficient_window(enumerate(pl, w), p, w);
                if (!rep.efficient) {
                    eff_ok = false;
                    eff_detail = "(t,r)=(" + std::to_string(t) + "," + std::to_string(r) +
                                 (mirror ? ") mirror" : ")");
                }
            }
        }
    report("efficiency-sweep", eff_ok, eff_detail);

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(t,r) broadcast domination on the triangular grid"};
    app.require_subcommand(1);

    int t = 1, r = 1, n = -1, L = 8, k = -1;
    std::uint64_t budget = 0;
    std::uint64_t bounds_budget = 2000000;
    bool mirror = false, use_pattern = false, use_witness = false;
    bool reception = false, reach = false, boundary = false;
    std::string format = "json", out, towers_json;

    CLI::App* sp = app.add_subcommand("pattern", "periodic tower pattern over a window");
    sp->add_option("--t", t, "transmission strength")->required();
    sp->add_option("--r", r, "reception demand")->required();
    sp->add_option("--window", L, "window half-width L")->required();
    sp->add_flag("--mirror", mirror, "use the mirrored orientation");
    sp->add_option("--format", format)->check(CLI::IsMember({"json", "svg", "ascii"}));
    sp->add_option("--out", out, "write to file instead of stdout");

    CLI::App* sv = app.add_subcommand("verify", "check pattern efficiency on a window");
    sv->add_option("--t", t)->required();
    sv->add_option("--r", r)->required();
    sv->add_option("--window", L)->required();
    sv->add_flag("--mirror", mirror);
    sv->add_option("--out", out);

    CLI::App* ss = app.add_subcommand("solve", "exact minimum domination on T_n");
    ss->add_option("--n", n, "triangle side")->required();
    ss->add_option("--t", t)->required();
    ss->add_option("--r", r)->required();
    ss->add_option("--k", k, "feasibility target size");
    ss->add_option("--budget", budget, "node budget (0 = unlimited)");
    ss->add_option("--format", format)->check(CLI::IsMember({"json"}));
    ss->add_option("--out", out);

    CLI::App* sb = app.add_subcommand("bounds", "lower/upper/exact bounds report for T_n");
    sb->add_option("--t", t)->required();
    sb->add_option("--r", r)->required();
    sb->add_option("--n", n, "triangle side")->required();
    sb->add_option("--budget", bounds_budget, "exact-search node budget");
    sb->add_option("--format", format)->check(CLI::IsMember({"json"}));
    sb->add_option("--out", out);

    CLI::App* sr = app.add_subcommand("render", "draw a region with towers");
    sr->add_option("--t", t)->required();
    sr->add_option("--r", r)->required();
    sr->add_option("--n", n, "triangle side (matchstick region)");
    sr->add_option("--window", L, "window half-width (grid region)");
    sr->add_flag("--pattern", use_pattern, "towers from the periodic pattern");
    sr->add_flag("--witness", use_witness, "towers from the certified witness (needs --n)");
    sr->add_option("--towers", towers_json, "inline tower list [[m,n],...]");
    sr->add_flag("--reception", reception, "label per-vertex reception");
    sr->add_flag("--reach", reach, "draw reach hexagons");
    sr->add_flag("--boundary", boundary, "draw the region outline");
    sr->add_option("--format", format)->check(CLI::IsMember({"svg", "ascii"}));
    sr->add_option("--out", out);

    CLI::App* st = app.add_subcommand("selftest", "run built-in invariant checks");
    (void)st;

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sp->parsed()) return cmd_pattern(t, r, L, mirror, format, out);
        if (sv->parsed()) return cmd_verify(t, r, L, mirror, out);
        if (ss->parsed()) return cmd_solve(n, t, r, k, budget, out);
        if (sb->parsed()) return cmd_bounds(t, r, n, bounds_budget, out);
        if (sr->parsed())
            return cmd_render(t, r, n, L, use_pattern, use_witness, towers_json, reception,
                              reach, boundary, format == "json" ? "ascii" : format, out);
        return cmd_selftest();
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
}
