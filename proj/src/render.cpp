#include "tridom/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tridom {

namespace {

constexpr double kRow = 0.8660254037844386;  // sqrt(3)/2

PointSet region_points(const RenderSpec& spec) {
    if (const auto* ms = std::get_if<MatchstickRegion>(&spec.region)) return ms->points;
    return window_core(std::get<Window>(spec.region));
}

PointSet sorted_towers(const RenderSpec& spec) {
    PointSet t = spec.towers;
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
    return t;
}

char value_char(int v) {
    if (v < 0) return '?';
    if (v <= 9) return static_cast<char>('0' + v);
    if (v <= 35) return static_cast<char>('a' + v - 10);
    return 'z';
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", x);
    std::string s(buf);
    if (s == "-0.0000") s = "0.0000";
    return s;
}

double cart_x(Point p) { return p.m - p.n / 2.0; }

}  // namespace

std::string render_ascii(const RenderSpec& spec) {
    const PointSet region = region_points(spec);
    const PointSet towers = sorted_towers(spec);
    const bool triangle = std::holds_alternative<MatchstickRegion>(spec.region);

    int n_lo = std::numeric_limits<int>::max(), n_hi = std::numeric_limits<int>::min();
    int c_lo = std::numeric_limits<int>::max(), c_hi = std::numeric_limits<int>::min();
    const auto widen = [&](Point p) {
        n_lo = std::min(n_lo, p.n);
        n_hi = std::max(n_hi, p.n);
        c_lo = std::min(c_lo, 2 * p.m - p.n);
        c_hi = std::max(c_hi, 2 * p.m - p.n);
    };
    for (const Point p : region) widen(p);
    for (const Point p : towers) widen(p);
    if (n_lo > n_hi) return "";

    const std::size_t width = static_cast<std::size_t>(c_hi - c_lo + 1);
    std::vector<std::string> rows(static_cast<std::size_t>(n_hi - n_lo + 1),
                                  std::string(width, ' '));
    const auto cell = [&](Point p) -> char& {
        const std::size_t row =
            static_cast<std::size_t>(triangle ? p.n - n_lo : n_hi - p.n);
        return rows[row][static_cast<std::size_t>(2 * p.m - p.n - c_lo)];
    };
    for (const Point p : region) {
        if (spec.show.reception_values)
            cell(p) = value_char(reception(p, towers, spec.params.t));
        else
            cell(p) = '.';
    }
    // Towers print '#' except in value mode, where a region vertex keeps its
    // reception digit (a tower hears itself at full strength, so it stays
    // recognizable as the local maximum).
    for (const Point p : towers) {
        if (spec.show.reception_values &&
            std::binary_search(region.begin(), region.end(), p, RowMajorLess{}))
            continue;
        cell(p) = '#';
    }

    std::string out;
    for (std::string& row : rows) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

std::string render_svg(const RenderSpec& spec) {
    const PointSet region = region_points(spec);
    const PointSet towers = sorted_towers(spec);
    const bool triangle = std::holds_alternative<MatchstickRegion>(spec.region);
    const int t = spec.params.t;

    // A matchstick triangle prints apex (row 0) at the top, a window its
    // highest row; SVG's y axis grows downward, so flip for windows only.
    int n_hi = std::numeric_limits<int>::min();
    for (const Point p : region) n_hi = std::max(n_hi, p.n);
    for (const Point p : towers) n_hi = std::max(n_hi, p.n);
    const auto cart_y = [&](Point p) { return triangle ? kRow * p.n : kRow * (n_hi - p.n); };
    const auto cart_yd = [&](double n) { return triangle ? kRow * n : kRow * (n_hi - n); };

    constexpr double kScale = 24.0;
    double x_lo = 0, x_hi = 0, y_lo = 0, y_hi = 0;
    bool first = true;
    const auto widen = [&](double x, double y) {
        if (first) {
            x_lo = x_hi = x;
            y_lo = y_hi = y;
            first = false;
        } else {
            x_lo = std::min(x_lo, x);
            x_hi = std::max(x_hi, x);
            y_lo = std::min(y_lo, y);
            y_hi = std::max(y_hi, y);
        }
    };
    for (const Point p : region) widen(cart_x(p), cart_y(p));
    for (const Point p : towers) {
        widen(cart_x(p), cart_y(p));
        if (spec.show.reach_hexagons && t > 1)
            for (const Point s : kSteps) {
                const Point q{p.m + (t - 1) * s.m, p.n + (t - 1) * s.n};
                widen(cart_x(q), cart_y(q));
            }
    }
    const double pad = 1.0;
    const auto X = [&](double x) { return (x - x_lo + pad) * kScale; };
    const auto Yd = [&](double y) { return (y - y_lo + pad) * kScale; };
    const auto px = [&](Point p) { return X(cart_x(p)); };
    const auto py = [&](Point p) { return Yd(cart_y(p)); };
    const double w = (x_hi - x_lo + 2 * pad) * kScale;
    const double h = (y_hi - y_lo + 2 * pad) * kScale;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h)
        << "\">\n";

    // Grid edges, each drawn once via the three forward steps.
    svg << "<g stroke=\"#b0b0b0\" stroke-width=\"1\">\n";
    for (const Point p : region)
        for (int s = 0; s < 3; ++s) {
            const Point q = p + kSteps[s];
            if (!std::binary_search(region.begin(), region.end(), q, RowMajorLess{})) continue;
            svg << "<line x1=\"" << fmt(px(p)) << "\" y1=\"" << fmt(py(p)) << "\" x2=\""
                << fmt(px(q)) << "\" y2=\"" << fmt(py(q)) << "\"/>\n";
        }
    svg << "</g>\n";

    if (spec.show.boundary) {
        std::vector<Point> corners;
        if (triangle) {
            const int nn = std::get<MatchstickRegion>(spec.region).n;
            corners = {{0, 0}, {0, nn}, {nn, nn}};
        } else {
            const Window& win = std::get<Window>(spec.region);
            const int L = win.half_width;
            const Point c = win.center;
            corners = {{c.m - L, c.n - L},
                       {c.m + L, c.n - L},
                       {c.m + L, c.n + L},
                       {c.m - L, c.n + L}};
        }
        svg << "<polygon fill=\"none\" stroke=\"#303030\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < corners.size(); ++i) {
            if (i) svg << ' ';
            svg << fmt(px(corners[i])) << ',' << fmt(py(corners[i]));
        }
        svg << "\"/>\n";
    }

    if (spec.show.reach_hexagons && t > 1) {
        svg << "<g fill=\"#f4c842\" fill-opacity=\"0.2\" stroke=\"#c79a1e\" stroke-width=\"1\">\n";
        for (const Point v : towers) {
            svg << "<polygon points=\"";
            for (int s = 0; s < 6; ++s) {
                const Point q{v.m + (t - 1) * kSteps[s].m, v.n + (t - 1) * kSteps[s].n};
                if (s) svg << ' ';
                svg << fmt(px(q)) << ',' << fmt(py(q));
            }
            svg << "\"/>\n";
        }
        svg << "</g>\n";
    }

    svg << "<g fill=\"#606060\">\n";
    for (const Point p : region) {
        if (std::binary_search(towers.begin(), towers.end(), p)) continue;
        svg << "<circle cx=\"" << fmt(px(p)) << "\" cy=\"" << fmt(py(p)) << "\" r=\""
            << fmt(2.5) << "\"/>\n";
    }
    svg << "</g>\n<g fill=\"#c0392b\">\n";
    for (const Point p : towers)
        svg << "<circle cx=\"" << fmt(px(p)) << "\" cy=\"" << fmt(py(p)) << "\" r=\""
            << fmt(5.0) << "\"/>\n";
    svg << "</g>\n";

    if (spec.show.reception_values) {
        svg << "<g font-family=\"monospace\" font-size=\"9\" fill=\"#1f3a93\">\n";
        for (const Point p : region)
            svg << "<text x=\"" << fmt(px(p) + 3.5) << "\" y=\"" << fmt(py(p) - 3.5)
                << "\">" << reception(p, towers, t) << "</text>\n";
        svg << "</g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace tridom
