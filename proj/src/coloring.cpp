#include "secg/coloring.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace secg {

bool StrongColoring::total() const {
    return std::none_of(color.begin(), color.end(),
                        [](int c) { return c == kUncolored; });
}

int StrongColoring::assigned_count() const {
    return static_cast<int>(std::count_if(color.begin(), color.end(),
                                          [](int c) { return c != kUncolored; }));
}

int StrongColoring::used_colors() const {
    std::set<int> used;
    for (int c : color)
        if (c != kUncolored) used.insert(c);
    return static_cast<int>(used.size());
}

namespace {

void check_sizes(const Graph& g, const StrongColoring& c) {
    if (static_cast<int>(c.color.size()) != g.edge_count())
        throw std::invalid_argument("coloring size does not match edge count");
    for (int col : c.color)
        if (col != kUncolored && (col < 0 || col >= c.palette))
            throw std::invalid_argument("color out of palette");
}

Verdict verify_impl(const Graph& g, const StrongColoring& c) {
    Verdict verdict;
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!c.assigned(e)) continue;
        auto [u, v] = g.edge(e);
        for (int e2 : edge_two_neighborhood(g, e)) {
            if (e2 <= e || !c.assigned(e2)) continue;
            if (c.color[e] != c.color[e2]) continue;
            auto [a, b] = g.edge(e2);
            int dist = (a == u || a == v || b == u || b == v) ? 1 : 2;
            verdict.conflicts.push_back({e, e2, dist});
        }
    }
    verdict.valid = verdict.conflicts.empty();
    return verdict;
}

}  // namespace

Verdict verify_strong(const Graph& g, const StrongColoring& c) {
    check_sizes(g, c);
    if (!c.total())
        throw std::invalid_argument("coloring is partial; a total coloring is required");
    return verify_impl(g, c);
}

Verdict verify_strong_partial(const Graph& g, const StrongColoring& c) {
    check_sizes(g, c);
    return verify_impl(g, c);
}

ConflictGraph conflict_graph(const Graph& g) {
    ConflictGraph cg;
    cg.node_count = g.edge_count();
    cg.adj.resize(cg.node_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        cg.adj[e] = edge_two_neighborhood(g, e);
        for (int e2 : cg.adj[e])
            if (e < e2) cg.links.emplace_back(e, e2);
    }
    return cg;
}

std::vector<int> free_colors(const Graph& g, const StrongColoring& c, int e) {
    check_sizes(g, c);
    if (e < 0 || e >= g.edge_count())
        throw std::invalid_argument("edge id out of range");
    if (c.assigned(e))
        throw std::invalid_argument("edge is already colored");
    std::vector<char> used(c.palette, 0);
    for (int e2 : edge_two_neighborhood(g, e))
        if (c.assigned(e2)) used[c.color[e2]] = 1;
    std::vector<int> free;
    for (int col = 0; col < c.palette; ++col)
        if (!used[col]) free.push_back(col);
    return free;
}

GreedyOutcome color_greedy(const Graph& g, const std::vector<int>& order,
                           int palette) {
    if (static_cast<int>(order.size()) != g.edge_count())
        throw std::invalid_argument("order must be a permutation of edge ids");
    std::vector<char> seen(g.edge_count(), 0);
    for (int e : order) {
        if (e < 0 || e >= g.edge_count() || seen[e])
            throw std::invalid_argument("order must be a permutation of edge ids");
        seen[e] = 1;
    }
    GreedyOutcome out;
    out.coloring = StrongColoring::empty(g.edge_count(), palette);
    for (int e : order) {
        auto free = free_colors(g, out.coloring, e);
        if (free.empty()) {
            out.ok = false;
            out.blocking_edge = e;
            return out;
        }
        out.coloring.color[e] = free.front();
    }
    out.ok = true;
    return out;
}

}  // namespace secg
