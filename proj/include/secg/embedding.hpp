#pragma once

#include <utility>
#include <vector>

#include "secg/graph.hpp"

namespace secg {

struct Dart {
    int from = -1;
    int to = -1;
    bool operator==(const Dart&) const = default;
};

// Face of a plane embedding: the boundary walk as a cyclic dart sequence.
// Length is the dart count, so a bridge contributes twice to its face.
struct Face {
    std::vector<Dart> darts;
    int length() const { return static_cast<int>(darts.size()); }
    // Tails of the darts, in walk order (vertices may repeat).
    std::vector<int> vertex_walk() const;
    // Edge ids of the walk, in walk order (bridges appear twice).
    std::vector<int> edge_walk(const Graph& g) const;
};

// Plane embedding given by a rotation system: for every vertex the
// clockwise cyclic order of its neighbors. Faces are traced eagerly at
// construction: the dart following (u,v) is (v,w) where w is the
// successor of u in the rotation at v. Construction rejects rotations
// that are not neighbor permutations and rotation systems of positive
// genus (per edged component, n - m + f = 2 must hold).
class PlaneEmbedding {
public:
    PlaneEmbedding(Graph g, std::vector<std::vector<int>> rotation);

    // lvalue-only accessors: binding them to a temporary embedding would
    // dangle, so that is a compile error
    const Graph& graph() const& { return g_; }
    const Graph& graph() const&& = delete;
    const std::vector<int>& rotation(int v) const& { return rot_.at(v); }
    const std::vector<int>& rotation(int) const&& = delete;
    const std::vector<std::vector<int>>& rotations() const& { return rot_; }
    const std::vector<std::vector<int>>& rotations() const&& = delete;
    const std::vector<Face>& faces() const& { return faces_; }
    const std::vector<Face>& faces() const&& = delete;

    // dart ids are 2*edge_id (+1 when from > to)
    int dart_id(int from, int to) const;
    Dart dart(int id) const;
    int face_of_dart(int from, int to) const;
    Dart next_dart(const Dart& d) const;

private:
    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<Face> faces_;
    std::vector<int> dart_face_;
};

// The faces of the embedding (already traced at construction).
const std::vector<Face>& trace_faces(const PlaneEmbedding& e);

// Embeddings of the connected components, with per-component maps back
// to the parent vertex ids. Isolated vertices form their own components.
struct ComponentEmbedding {
    PlaneEmbedding embedding;
    std::vector<int> parent_vertex;
};
std::vector<ComponentEmbedding> split_components(const PlaneEmbedding& e);

// Induced sub-embedding after deleting a vertex set; vertices are
// renumbered, surviving rotations keep their cyclic order.
struct ReducedEmbedding {
    PlaneEmbedding embedding;
    std::vector<int> parent_vertex;
};
ReducedEmbedding remove_vertices(const PlaneEmbedding& e,
                                 const std::vector<int>& removal);

}  // namespace secg
