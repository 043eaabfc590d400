#include "tridom/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace tridom {

static void require_params(Params p, const char* who) {
    if (!params_valid(p)) throw std::invalid_argument(std::string(who) + ": need t >= r >= 1");
}

PatternLattice pattern(Params p) {
    require_params(p, "pattern");
    return {p, {2 * p.t - p.r, p.t}, {p.t - p.r, 2 * p.t - p.r}, false};
}

PatternLattice mirror_pattern(Params p) {
    require_params(p, "mirror_pattern");
    return {p, {p.t, 2 * p.t - p.r}, {2 * p.t - p.r, p.t - p.r}, true};
}

static long long det(const PatternLattice& pl) {
    return static_cast<long long>(pl.v1.m) * pl.v2.n - static_cast<long long>(pl.v1.n) * pl.v2.m;
}

long long vertices_per_tower(Params p) {
    require_params(p, "vertices_per_tower");
    const long long t = p.t, r = p.r;
    return 3 * t * t - 3 * t * r + r * r;
}

bool lattice_member(const PatternLattice& pl, Point q) {
    const long long d = det(pl);
    // Cramer: a = (q.m*v2.n - q.n*v2.m)/d, b = (v1.m*q.n - v1.n*q.m)/d.
    const long long na = static_cast<long long>(q.m) * pl.v2.n - static_cast<long long>(q.n) * pl.v2.m;
    const long long nb = static_cast<long long>(pl.v1.m) * q.n - static_cast<long long>(pl.v1.n) * q.m;
    return na % d == 0 && nb % d == 0;
}

int axis_period(Params p) {
    require_params(p, "axis_period");
    const PatternLattice pl = pattern(p);
    const long long limit = vertices_per_tower(p);
    for (int s = 1; s <= limit; ++s)
        if (lattice_member(pl, {s, 0})) return s;
    throw std::logic_error("axis_period: no period found within the fundamental-domain bound");
}

PointSet enumerate_shifted(const PatternLattice& pl, Point shift, const Window& w) {
    const long long d = det(pl);
    if (d == 0) throw std::invalid_argument("enumerate: basis is degenerate");
    const int reach = w.half_width + w.margin;
    const int lo_m = w.center.m - reach, hi_m = w.center.m + reach;
    const int lo_n = w.center.n - reach, hi_n = w.center.n + reach;

    // Coefficient ranges from the box corners via Cramer's rule.
    long long a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;
    bool first = true;
    for (const int x : {lo_m - shift.m, hi_m - shift.m})
        for (const int y : {lo_n - shift.n, hi_n - shift.n}) {
            const double a = (static_cast<double>(x) * pl.v2.n - static_cast<double>(y) * pl.v2.m) / d;
            const double b = (static_cast<double>(pl.v1.m) * y - static_cast<double>(pl.v1.n) * x) / d;
            const long long afl = static_cast<long long>(std::floor(a));
            const long long bfl = static_cast<long long>(std::floor(b));
            if (first || afl < a_lo) a_lo = afl;
            if (first || afl + 1 > a_hi) a_hi = afl + 1;
            if (first || bfl < b_lo) b_lo = bfl;
            if (first || bfl + 1 > b_hi) b_hi = bfl + 1;
            first = false;
        }

    PointSet out;
    for (long long a = a_lo - 1; a <= a_hi + 1; ++a)
        for (long long b = b_lo - 1; b <= b_hi + 1; ++b) {
            const Point q{static_cast<int>(a * pl.v1.m + b * pl.v2.m + shift.m),
                          static_cast<int>(a * pl.v1.n + b * pl.v2.n + shift.n)};
            if (q.m >= lo_m && q.m <= hi_m && q.n >= lo_n && q.n <= hi_n) out.push_back(q);
        }
    std::sort(out.begin(), out.end(), RowMajorLess{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointSet enumerate(const PatternLattice& pl, const Window& w) {
    return enumerate_shifted(pl, {0, 0}, w);
}

}  // namespace tridom
