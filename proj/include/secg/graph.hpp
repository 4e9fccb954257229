#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace secg {

// Sentinel for "no cycle" / "fewer than two 2-vertices".
constexpr int kInfinity = std::numeric_limits<int>::max();

// Undirected simple graph on vertices 0..n-1. Edges get ids 0..m-1 in
// insertion order; stored endpoint pairs always satisfy u < v.
// Immutable once built (construction helpers aside), safe to share.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    // Rejects loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const;
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const;
    // Edge ids incident to v, aligned with neighbors(v).
    const std::vector<int>& incident_edges(int v) const;
    std::pair<int, int> edge(int id) const;
    int edge_id(int u, int v) const;  // -1 if absent
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    // Component id per vertex, ids 0..c-1 in order of smallest member.
    std::vector<int> component_ids(int* component_count = nullptr) const;
    bool connected() const;

private:
    void check_vertex(int v) const;

    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

// Length of a shortest cycle, kInfinity for forests. One BFS per vertex.
int girth(const Graph& g);

// Minimum graph distance between two distinct 2-vertices, kInfinity if
// there are fewer than two of them.
int two_vertex_min_distance(const Graph& g);

// Vertex taxonomy used by the reduction and discharging rules.
// A 4-vertex with four 2-neighbors fits neither four_two nor four_three
// and is reported as plain; such vertices cannot survive the reduction
// (they contain a "vertex with only 2^- neighbors" configuration).
enum class VertexKind {
    plain,         // k-vertex with no special role
    one_vertex,    // degree 1
    two_weak,      // 2-vertex with a 3^- neighbor
    two_semiweak,  // 2-vertex, not weak, with a 4_3 neighbor
    two_strong,    // 2-vertex, neither of the above
    four_two,      // 4-vertex with at most two 2-neighbors
    four_three,    // 4-vertex with exactly three 2-neighbors
};

struct VertexClass {
    VertexKind kind;
    int degree;
};

const char* to_string(VertexKind k);

VertexClass classify_vertex(const Graph& g, int v);

// All edges at line-graph distance 1 or 2 from e, e excluded. Sorted.
std::vector<int> edge_two_neighborhood(const Graph& g, int e);

}  // namespace secg
