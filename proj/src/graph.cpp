#include "secg/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace secg {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(vertex_count);
    inc_.resize(vertex_count);
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                    "," + std::to_string(v) + ")");
    int id = edge_count();
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    inc_[u].push_back(id);
    inc_[v].push_back(id);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

const std::vector<int>& Graph::incident_edges(int v) const {
    check_vertex(v);
    return inc_[v];
}

std::pair<int, int> Graph::edge(int id) const {
    if (id < 0 || id >= edge_count())
        throw std::invalid_argument("edge id out of range");
    return edges_[id];
}

int Graph::edge_id(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[u];
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == v) return inc_[u][i];
    return -1;
}

std::vector<int> Graph::component_ids(int* component_count) const {
    std::vector<int> comp(vertex_count(), -1);
    int c = 0;
    for (int s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        std::deque<int> queue{s};
        comp[s] = c;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj_[v])
                if (comp[w] < 0) {
                    comp[w] = c;
                    queue.push_back(w);
                }
        }
        ++c;
    }
    if (component_count) *component_count = c;
    return comp;
}

bool Graph::connected() const {
    if (vertex_count() == 0) return true;
    int c = 0;
    component_ids(&c);
    return c == 1;
}

int girth(const Graph& g) {
    int best = kInfinity;
    int n = g.vertex_count();
    std::vector<int> dist(n), parent_edge(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent_edge.begin(), parent_edge.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (2 * dist[v] >= best) break;  // cannot improve from here
            const auto& nbrs = g.neighbors(v);
            const auto& eids = g.incident_edges(v);
            for (size_t i = 0; i < nbrs.size(); ++i) {
                int w = nbrs[i];
                if (eids[i] == parent_edge[v]) continue;
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = eids[i];
                    queue.push_back(w);
                } else {
                    // Non-tree edge closes a cycle through s of this length.
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

int two_vertex_min_distance(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> twos;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 2) twos.push_back(v);
    if (twos.size() < 2) return kInfinity;
    int best = kInfinity;
    std::vector<int> dist(n);
    for (int s : twos) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (v != s && g.degree(v) == 2) {
                best = std::min(best, dist[v]);
                // the first 2-vertex reached is the nearest one
                break;
            }
            for (int w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
        }
    }
    return best;
}

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::plain: return "plain";
        case VertexKind::one_vertex: return "1-vertex";
        case VertexKind::two_weak: return "weak 2-vertex";
        case VertexKind::two_semiweak: return "semiweak 2-vertex";
        case VertexKind::two_strong: return "strong 2-vertex";
        case VertexKind::four_two: return "4_2-vertex";
        case VertexKind::four_three: return "4_3-vertex";
    }
    return "?";
}

namespace {

int two_neighbor_count(const Graph& g, int v) {
    int c = 0;
    for (int w : g.neighbors(v))
        if (g.degree(w) == 2) ++c;
    return c;
}

bool is_four_three(const Graph& g, int v) {
    return g.degree(v) == 4 && two_neighbor_count(g, v) == 3;
}

}  // namespace

VertexClass classify_vertex(const Graph& g, int v) {
    int d = g.degree(v);
    if (d == 1) return {VertexKind::one_vertex, 1};
    if (d == 2) {
        bool weak = false, semiweak = false;
        for (int w : g.neighbors(v)) {
            if (g.degree(w) <= 3) weak = true;
            if (is_four_three(g, w)) semiweak = true;
        }
        if (weak) return {VertexKind::two_weak, 2};
        if (semiweak) return {VertexKind::two_semiweak, 2};
        return {VertexKind::two_strong, 2};
    }
    if (d == 4) {
        int t = two_neighbor_count(g, v);
        if (t <= 2) return {VertexKind::four_two, 4};
        if (t == 3) return {VertexKind::four_three, 4};
        return {VertexKind::plain, 4};  // four 2-neighbors: no class
    }
    return {VertexKind::plain, d};
}

std::vector<int> edge_two_neighborhood(const Graph& g, int e) {
    auto [u, v] = g.edge(e);  // validates e
    std::vector<char> seen(g.edge_count(), 0);
    seen[e] = 1;
    std::vector<int> result;
    auto visit = [&](int id) {
        if (!seen[id]) {
            seen[id] = 1;
            result.push_back(id);
        }
    };
    // distance 1: edges sharing an endpoint with e
    std::vector<int> dist1;
    for (int x : {u, v})
        for (int id : g.incident_edges(x))
            if (id != e && !seen[id]) {
                seen[id] = 1;
                dist1.push_back(id);
            }
    // distance 2: edges adjacent to a distance-1 edge
    for (int id : dist1) result.push_back(id);
    for (int id : dist1) {
        auto [a, b] = g.edge(id);
        for (int x : {a, b})
            for (int id2 : g.incident_edges(x)) visit(id2);
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace secg
