#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"

namespace tridom {

// ceil(|T_n| / ball size): minimum towers when r = 1.
long long lower_bound_t1(int n, int t);

// Exact values 1/2/3 for r = 1 on the proven small-n ranges; absent beyond.
std::optional<int> exact_small_t1(int n, int t);

// Odd-t arrangement: returns (n, bound) with n = ell*(2(t-1) - t/2) and
// bound = triangular(ell).
std::pair<int, long long> upper_odd_t(int ell, int t);

// Quarter-split bound for (3,1): triangular(n/4 + 1).
long long upper_31(int n);

// Closed-form period-tiling upper bounds exist for these parameter pairs.
bool table_supported(Params p);

// Closed form at n = ell*k + beta; first case when beta = 0.
long long table_upper(Params p, int n);

// A dominating set of T_ell at the per-tile cardinality the closed forms
// charge per tile; found by solver feasibility, throws if unattainable.
PointSet tile_template(Params p);

// Certified dominating set of T_n assembled from the periodic pattern:
// towers within distance t-1 of the region are clamped onto it, the union
// is verified and pruned; anchor shifts and the mirror orientation are
// swept until the closed-form size is met, with a budgeted exact-search
// fallback.  Always returns a verified dominating set; its size can
// exceed table_upper only when no set of that size was found.
PointSet witness(Params p, int n);

struct MonotonicityViolation {
    std::array<int, 3> lhs;  // (t, r, n) whose value should be <=
    std::array<int, 3> rhs;
    int lhs_value = 0;
    int rhs_value = 0;
    std::string relation;
};

// Checks the three monotonicity inequalities over exactly solved values:
// gamma(t,r,n) <= gamma(t-1,r,n), gamma(t,r,n) <= gamma(t,r+1,n),
// gamma(t,r,n) <= gamma(t,r,n+1).
std::vector<MonotonicityViolation> monotonicity_check(
    const std::map<std::array<int, 3>, int>& values);

struct BoundsReport {
    long long lower = 0;
    long long upper = 0;
    std::optional<long long> exact;
    PointSet witness;  // certifies `upper`
    std::vector<std::string> sources;
};

// Combined report: certified upper bounds only (every reported upper is
// witnessed by a verified dominating set); closed-form values appear in
// `sources` as notes.
BoundsReport bounds_report(Params p, int n, std::uint64_t exact_budget = 2000000);

}  // namespace tridom
