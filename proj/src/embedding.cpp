#include "secg/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace secg {

std::vector<int> Face::vertex_walk() const {
    std::vector<int> walk;
    walk.reserve(darts.size());
    for (const Dart& d : darts) walk.push_back(d.from);
    return walk;
}

std::vector<int> Face::edge_walk(const Graph& g) const {
    std::vector<int> walk;
    walk.reserve(darts.size());
    for (const Dart& d : darts) walk.push_back(g.edge_id(d.from, d.to));
    return walk;
}

PlaneEmbedding::PlaneEmbedding(Graph g, std::vector<std::vector<int>> rotation)
    : g_(std::move(g)), rot_(std::move(rotation)) {
    int n = g_.vertex_count();
    if (static_cast<int>(rot_.size()) != n)
        throw std::invalid_argument("rotation must cover every vertex");
    for (int v = 0; v < n; ++v) {
        auto sorted_rot = rot_[v];
        auto sorted_nbr = g_.neighbors(v);
        std::sort(sorted_rot.begin(), sorted_rot.end());
        std::sort(sorted_nbr.begin(), sorted_nbr.end());
        if (sorted_rot != sorted_nbr)
            throw std::invalid_argument(
                "rotation at vertex " + std::to_string(v) +
                " is not a permutation of its neighbors");
    }

    // Trace all faces: start each from the smallest unvisited dart id.
    int m = g_.edge_count();
    dart_face_.assign(2 * m, -1);
    for (int start = 0; start < 2 * m; ++start) {
        if (dart_face_[start] >= 0) continue;
        Face face;
        Dart d = dart(start);
        while (true) {
            int id = dart_id(d.from, d.to);
            if (dart_face_[id] >= 0) break;
            dart_face_[id] = static_cast<int>(faces_.size());
            face.darts.push_back(d);
            d = next_dart(d);
        }
        faces_.push_back(std::move(face));
    }

    // Genus check, per component with at least one edge.
    int comp_count = 0;
    std::vector<int> comp = g_.component_ids(&comp_count);
    std::vector<int> cn(comp_count, 0), cm(comp_count, 0), cf(comp_count, 0);
    for (int v = 0; v < n; ++v) ++cn[comp[v]];
    for (int e = 0; e < m; ++e) ++cm[comp[g_.edge(e).first]];
    for (const Face& f : faces_) ++cf[comp[f.darts.front().from]];
    for (int c = 0; c < comp_count; ++c) {
        if (cm[c] == 0) continue;
        if (cn[c] - cm[c] + cf[c] != 2)
            throw std::invalid_argument(
                "rotation system is not planar (component fails Euler check)");
    }
}

int PlaneEmbedding::dart_id(int from, int to) const {
    int e = g_.edge_id(from, to);
    if (e < 0)
        throw std::invalid_argument("no edge (" + std::to_string(from) + "," +
                                    std::to_string(to) + ")");
    return 2 * e + (from > to ? 1 : 0);
}

Dart PlaneEmbedding::dart(int id) const {
    auto [u, v] = g_.edge(id / 2);
    return (id % 2 == 0) ? Dart{u, v} : Dart{v, u};
}

int PlaneEmbedding::face_of_dart(int from, int to) const {
    return dart_face_.at(dart_id(from, to));
}

Dart PlaneEmbedding::next_dart(const Dart& d) const {
    const auto& rot = rot_[d.to];
    size_t pos = 0;
    while (pos < rot.size() && rot[pos] != d.from) ++pos;
    if (pos == rot.size())
        throw std::logic_error("malformed rotation during face trace");
    int w = rot[(pos + 1) % rot.size()];
    return Dart{d.to, w};
}

const std::vector<Face>& trace_faces(const PlaneEmbedding& e) {
    return e.faces();
}

std::vector<ComponentEmbedding> split_components(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    int comp_count = 0;
    std::vector<int> comp = g.component_ids(&comp_count);
    std::vector<std::vector<int>> members(comp_count);
    for (int v = 0; v < g.vertex_count(); ++v) members[comp[v]].push_back(v);

    std::vector<ComponentEmbedding> out;
    out.reserve(comp_count);
    for (int c = 0; c < comp_count; ++c) {
        std::vector<int> local(g.vertex_count(), -1);
        for (size_t i = 0; i < members[c].size(); ++i)
            local[members[c][i]] = static_cast<int>(i);
        Graph sub(static_cast<int>(members[c].size()));
        for (int eid = 0; eid < g.edge_count(); ++eid) {
            auto [u, v] = g.edge(eid);
            if (comp[u] == c) sub.add_edge(local[u], local[v]);
        }
        std::vector<std::vector<int>> rot(members[c].size());
        for (int v : members[c])
            for (int w : e.rotation(v)) rot[local[v]].push_back(local[w]);
        out.push_back({PlaneEmbedding(std::move(sub), std::move(rot)),
                       members[c]});
    }
    return out;
}

ReducedEmbedding remove_vertices(const PlaneEmbedding& e,
                                 const std::vector<int>& removal) {
    const Graph& g = e.graph();
    std::vector<char> removed(g.vertex_count(), 0);
    for (int v : removal) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("removal vertex out of range");
        removed[v] = 1;
    }
    std::vector<int> parent;
    std::vector<int> local(g.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) {
            local[v] = static_cast<int>(parent.size());
            parent.push_back(v);
        }
    Graph sub(static_cast<int>(parent.size()));
    for (int eid = 0; eid < g.edge_count(); ++eid) {
        auto [u, v] = g.edge(eid);
        if (!removed[u] && !removed[v]) sub.add_edge(local[u], local[v]);
    }
    std::vector<std::vector<int>> rot(parent.size());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        for (int w : e.rotation(v))
            if (!removed[w]) rot[local[v]].push_back(local[w]);
    }
    return {PlaneEmbedding(std::move(sub), std::move(rot)), std::move(parent)};
}

}  // namespace secg
