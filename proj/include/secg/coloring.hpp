#pragma once

#include <utility>
#include <vector>

#include "secg/graph.hpp"

namespace secg {

constexpr int kUncolored = -1;

// Edge coloring, possibly partial. Colors are 0-based; 1-based labels
// exist only in file output.
struct StrongColoring {
    std::vector<int> color;  // per edge id, kUncolored when unassigned
    int palette = 0;

    static StrongColoring empty(int edge_count, int palette) {
        return {std::vector<int>(edge_count, kUncolored), palette};
    }
    bool assigned(int e) const { return color[e] != kUncolored; }
    bool total() const;
    int assigned_count() const;
    int used_colors() const;  // number of distinct assigned colors
};

struct Conflict {
    int e1, e2;    // edge ids, e1 < e2
    int distance;  // 1 or 2 in the line graph
};

struct Verdict {
    bool valid = false;
    std::vector<Conflict> conflicts;  // complete list, not just the first
};

// Requires a total coloring within the palette; reports every pair of
// edges at line-graph distance <= 2 sharing a color.
Verdict verify_strong(const Graph& g, const StrongColoring& c);

// Same check restricted to assigned edges; partial colorings allowed.
Verdict verify_strong_partial(const Graph& g, const StrongColoring& c);

// Square of the line graph: nodes are edge ids, links join edges at
// line-graph distance <= 2. Proper vertex colorings of this graph are
// exactly strong edge colorings of g.
struct ConflictGraph {
    int node_count = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::pair<int, int>> links;  // each pair once, e1 < e2
};

ConflictGraph conflict_graph(const Graph& g);

// Palette colors not appearing on any colored edge of e's 2-neighborhood.
// e must be uncolored.
std::vector<int> free_colors(const Graph& g, const StrongColoring& c, int e);

// First-fit along the given edge order. Failure is a value: callers
// inspect the blocking edge.
struct GreedyOutcome {
    bool ok = false;
    StrongColoring coloring;
    int blocking_edge = -1;
};

GreedyOutcome color_greedy(const Graph& g, const std::vector<int>& order,
                           int palette);

}  // namespace secg
