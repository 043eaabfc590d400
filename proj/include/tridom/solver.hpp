#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tridom/broadcast.hpp"
#include "tridom/lattice.hpp"

namespace tridom {

enum class SolveStatus { optimal, feasible, infeasible, budget_exhausted };

std::string to_string(SolveStatus s);

struct SolveInstance {
    int n = 0;
    Params params;
    std::optional<int> target_k;      // set: feasibility mode; unset: optimize
    std::uint64_t node_budget = 0;    // 0 = unlimited
};

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    int value = -1;                   // optimum / found size; -1 if none known
    PointSet witness;                 // empty when no set is known
    std::uint64_t nodes = 0;
    int lower_bound = 0;              // proven lower bound on the optimum
    double elapsed_seconds = 0.0;
};

// Exact branch-and-bound over tower subsets of T_n.  Optimize mode runs
// iterative deepening from the deficit lower bound; feasibility mode
// searches for a dominating set of size <= k.  Deterministic.
SolveResult solve(const SolveInstance& inst);

// Maximum-deficit-reduction greedy construction (unpruned).
PointSet greedy_incumbent(int n, Params p);

// Admissible bound on towers needed beyond `partial`:
// ceil(total residual deficit / best possible single-tower contribution).
int deficit_lower_bound(const PointSet& partial, int n, Params p);

// Remove redundant towers; sweeps in descending (m,n) order until stable.
PointSet prune_towers(const PointSet& region, const PointSet& towers, Params p);

}  // namespace tridom
