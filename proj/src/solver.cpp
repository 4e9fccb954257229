#include "secg/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace secg {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

int clique_lower_bound(const Graph& g) {
    int best = 0;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        best = std::max(best, g.degree(u) + g.degree(v) - 1);
    }
    return best;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Search {
    const ConflictGraph& cg;
    int k;
    long long node_limit;
    Clock::time_point deadline;
    bool has_deadline;

    std::vector<int> color;               // per node, -1 uncolored
    std::vector<std::vector<int>> ncnt;   // ncnt[v][c]: colored neighbors with c
    std::vector<int> sat;                 // distinct neighbor colors
    std::vector<int> usage;               // assignments per color
    long long nodes = 0;
    bool out_of_budget = false;

    Search(const ConflictGraph& cg_, int k_, const SolverConfig& cfg,
           Clock::time_point deadline_, bool has_deadline_)
        : cg(cg_), k(k_), node_limit(cfg.node_limit), deadline(deadline_),
          has_deadline(has_deadline_) {
        color.assign(cg.node_count, -1);
        ncnt.assign(cg.node_count, std::vector<int>(k, 0));
        sat.assign(cg.node_count, 0);
        usage.assign(k, 0);
    }

    bool budget_hit() {
        if (node_limit > 0 && nodes >= node_limit) return true;
        if (has_deadline && (nodes & 255) == 0 && Clock::now() > deadline)
            return true;
        return false;
    }

    int pick() const {
        int best = -1;
        for (int v = 0; v < cg.node_count; ++v) {
            if (color[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[best]) best = v;
        }
        return best;
    }

    void assign(int v, int c) {
        color[v] = c;
        ++usage[c];
        for (int w : cg.adj[v])
            if (++ncnt[w][c] == 1) ++sat[w];
    }

    void unassign(int v, int c) {
        color[v] = -1;
        --usage[c];
        for (int w : cg.adj[v])
            if (--ncnt[w][c] == 0) --sat[w];
    }

    bool solve(int uncolored) {
        if (uncolored == 0) return true;
        int v = pick();
        // New colors may only enter in increasing order; this fixes the
        // first node to color 0 and prunes palette permutations.
        int first_unused = 0;
        while (first_unused < k && usage[first_unused] > 0) ++first_unused;
        for (int c = 0; c < k && c <= first_unused; ++c) {
            if (ncnt[v][c] > 0) continue;
            ++nodes;
            if (budget_hit()) {
                out_of_budget = true;
                return false;
            }
            assign(v, c);
            if (solve(uncolored - 1)) return true;
            unassign(v, c);
            if (out_of_budget) return false;
        }
        return false;
    }
};

}  // namespace

SolveResult is_k_strong_colorable(const Graph& g, int k,
                                  const SolverConfig& cfg) {
    if (k < 1) throw std::invalid_argument("palette size must be positive");
    auto start = Clock::now();
    auto deadline = start;
    bool has_deadline = cfg.time_limit_seconds > 0;
    if (has_deadline)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(cfg.time_limit_seconds));

    ConflictGraph cg = conflict_graph(g);
    Search search(cg, k, cfg, deadline, has_deadline);
    bool found = search.solve(cg.node_count);

    SolveResult result;
    result.nodes = search.nodes;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (found) {
        result.status = SolveStatus::feasible;
        result.coloring = StrongColoring{search.color, k};
    } else if (search.out_of_budget) {
        result.status = SolveStatus::budget_exhausted;
    } else {
        result.status = SolveStatus::infeasible;
    }
    return result;
}

IndexResult strong_chromatic_index(const Graph& g, const SolverConfig& cfg) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("graph has no edges");
    auto start = Clock::now();
    IndexResult out;
    out.lower_bound = clique_lower_bound(g);
    int cap = cfg.max_colors > 0 ? cfg.max_colors : g.edge_count();

    SolverConfig per_call = cfg;
    for (int k = std::max(1, out.lower_bound); k <= cap; ++k) {
        if (cfg.time_limit_seconds > 0) {
            double elapsed =
                std::chrono::duration<double>(Clock::now() - start).count();
            per_call.time_limit_seconds = cfg.time_limit_seconds - elapsed;
            if (per_call.time_limit_seconds <= 0) {
                out.status = SolveStatus::budget_exhausted;
                break;
            }
        }
        SolveResult res = is_k_strong_colorable(g, k, per_call);
        out.nodes += res.nodes;
        if (res.status == SolveStatus::feasible) {
            out.status = SolveStatus::feasible;
            out.index = k;
            out.witness = std::move(res.coloring);
            break;
        }
        if (res.status == SolveStatus::budget_exhausted) {
            out.status = SolveStatus::budget_exhausted;
            break;
        }
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

}  // namespace secg
