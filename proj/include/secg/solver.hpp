#pragma once

#include "secg/coloring.hpp"
#include "secg/graph.hpp"

namespace secg {

struct SolverConfig {
    int max_colors = 0;              // 0: defaults to edge count
    long long node_limit = 0;        // 0: unlimited; per feasibility call
    double time_limit_seconds = 0;   // 0: unlimited; whole search
    bool deterministic = true;       // fixed tie-breaks (always honored)
};

enum class SolveStatus { feasible, infeasible, budget_exhausted };

const char* to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::infeasible;
    StrongColoring coloring;  // witness when feasible
    long long nodes = 0;
    double seconds = 0;
};

// max over edges uv of d(u)+d(v)-1: edges incident to u or v are
// pairwise at distance <= 2, so they form a clique in the conflict graph.
int clique_lower_bound(const Graph& g);

// Complete backtracking on the conflict graph, most-saturated node first
// (ties by smallest edge id), colors introduced in increasing order.
// "infeasible" is exhaustive and certifies chi'_s(g) > k.
SolveResult is_k_strong_colorable(const Graph& g, int k,
                                  const SolverConfig& cfg = {});

struct IndexResult {
    SolveStatus status = SolveStatus::budget_exhausted;
    int index = -1;  // valid when status == feasible
    StrongColoring witness;
    long long nodes = 0;
    double seconds = 0;
    int lower_bound = 0;
};

// Smallest k admitting a strong edge coloring, searched upward from the
// clique lower bound. Requires at least one edge.
IndexResult strong_chromatic_index(const Graph& g, const SolverConfig& cfg = {});

}  // namespace secg
