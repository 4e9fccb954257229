#include "secg/reduction.hpp"

#include <algorithm>
#include <cassert>

#include "secg/io.hpp"

namespace secg {

const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::K1: return "K1";
        case ConfigKind::K2: return "K2";
        case ConfigKind::K3: return "K3";
        case ConfigKind::K4: return "K4";
        case ConfigKind::K5: return "K5";
        case ConfigKind::K6: return "K6";
        case ConfigKind::S1: return "S1";
        case ConfigKind::S2: return "S2";
        case ConfigKind::S3: return "S3";
        case ConfigKind::S4: return "S4";
        case ConfigKind::S5: return "S5";
    }
    return "?";
}

namespace {

int other_neighbor(const Graph& g, int v, int not_this) {
    for (int w : g.neighbors(v))
        if (w != not_this) return w;
    throw std::logic_error("no other neighbor");
}

int third_neighbor(const Graph& g, int v, int a, int b) {
    for (int w : g.neighbors(v))
        if (w != a && w != b) return w;
    throw std::logic_error("no third neighbor");
}

// 2^- neighbor that is not a strong 2-vertex: a 1-vertex or a weak or
// semiweak 2-vertex. These are exactly the neighbors the "only strong
// 2-neighbors" argument removes.
bool non_strong_small(const Graph& g, int u) {
    int d = g.degree(u);
    if (d == 1) return true;
    if (d != 2) return false;
    return classify_vertex(g, u).kind != VertexKind::two_strong;
}

std::vector<int> sorted_small_neighbors(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v))
        if (g.degree(w) <= 2) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<Configuration> find_config_general(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    int n = g.vertex_count();

    // K1: 1-vertex with a 4^- neighbor.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v)[0];
        if (g.degree(u) <= 4) {
            Configuration c{ConfigKind::K1, {v, u}, -1, {v}, {{v, u}},
                            ExtendStrategy::greedy};
            return c;
        }
    }
    // K2: 1-vertex adjacent to a 5-vertex with another 2^- neighbor.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        int u = g.neighbors(v)[0];
        if (g.degree(u) != 5) continue;
        for (int x : g.neighbors(u))
            if (x != v && g.degree(x) <= 2) {
                Configuration c{ConfigKind::K2, {v, u}, -1, {v}, {{v, u}},
                                ExtendStrategy::greedy};
                return c;
            }
    }
    // K3: 2-vertex with two 4^- neighbors.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 2) continue;
        int u = g.neighbors(v)[0], w = g.neighbors(v)[1];
        if (g.degree(u) <= 4 && g.degree(w) <= 4) {
            if (u > w) std::swap(u, w);
            Configuration c{ConfigKind::K3, {v, u, w}, -1, {v},
                            {{v, u}, {v, w}}, ExtendStrategy::greedy};
            return c;
        }
    }
    // K4: vertex with only 2^- neighbors (vacuously an isolated vertex).
    for (int v = 0; v < n; ++v) {
        bool all_small = true;
        for (int w : g.neighbors(v))
            if (g.degree(w) > 2) {
                all_small = false;
                break;
            }
        if (!all_small) continue;
        Configuration c{ConfigKind::K4, {v}, -1, {v}, {}, ExtendStrategy::greedy};
        auto nbrs = g.neighbors(v);
        std::sort(nbrs.begin(), nbrs.end());
        for (int w : nbrs) c.extension.push_back({v, w});
        return c;
    }
    // K5: k-vertex, k >= 5, with k-1 2^- neighbors, one of them not a
    // strong 2-vertex.
    for (int v = 0; v < n; ++v) {
        int k = g.degree(v);
        if (k < 5) continue;
        auto small = sorted_small_neighbors(g, v);
        if (static_cast<int>(small.size()) != k - 1) continue;
        for (int u : small) {
            if (!non_strong_small(g, u)) continue;
            Configuration c{ConfigKind::K5, {v, u}, -1, {u}, {{u, v}},
                            ExtendStrategy::greedy};
            if (g.degree(u) == 2) {
                int w = other_neighbor(g, u, v);
                c.witness.push_back(w);
                c.extension.push_back({u, w});
            }
            return c;
        }
    }
    // K6: k-vertex, k >= 5, with k-2 2^- neighbors, at most two of them
    // nonweak 2-vertices. Removes the weak 2-neighbors and 1-neighbors.
    for (int v = 0; v < n; ++v) {
        int k = g.degree(v);
        if (k < 5) continue;
        auto small = sorted_small_neighbors(g, v);
        if (static_cast<int>(small.size()) != k - 2) continue;
        int nonweak = 0;
        std::vector<int> removable;
        for (int u : small) {
            if (g.degree(u) == 2 &&
                classify_vertex(g, u).kind != VertexKind::two_weak)
                ++nonweak;
            else
                removable.push_back(u);
        }
        if (nonweak > 2) continue;
        Configuration c{ConfigKind::K6, {v}, -1, removable, {},
                        ExtendStrategy::greedy};
        c.witness.insert(c.witness.end(), removable.begin(), removable.end());
        for (int u : removable) c.extension.push_back({v, u});
        for (int u : removable)
            if (g.degree(u) == 2)
                c.extension.push_back({u, other_neighbor(g, u, v)});
        return c;
    }
    return std::nullopt;
}

namespace {

// Rotates a face walk (known to have distinct vertices) to start at v0.
std::vector<int> rotate_walk(const std::vector<int>& walk, int v0) {
    auto it = std::find(walk.begin(), walk.end(), v0);
    assert(it != walk.end());
    std::vector<int> out;
    size_t start = it - walk.begin();
    for (size_t i = 0; i < walk.size(); ++i)
        out.push_back(walk[(start + i) % walk.size()]);
    return out;
}

bool distinct_vertices(const std::vector<int>& walk) {
    auto sorted = walk;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

std::optional<Configuration> find_config_subcubic(const PlaneEmbedding& e) {
    const Graph& g = e.graph();
    if (g.max_degree() > 3)
        throw std::invalid_argument("subcubic detector requires max degree <= 3");
    int n = g.vertex_count();

    // S1: vertex of degree <= 1.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 1) continue;
        Configuration c{ConfigKind::S1, {v}, -1, {v}, {}, ExtendStrategy::greedy};
        if (g.degree(v) == 1) {
            int u = g.neighbors(v)[0];
            c.witness.push_back(u);
            c.extension.push_back({v, u});
        }
        return c;
    }
    // S2: adjacent 2-vertices u, v; v is removed, w is v's other neighbor.
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 2) continue;
        int v = -1;
        for (int x : g.neighbors(u))
            if (g.degree(x) == 2 && (v < 0 || x < v)) v = x;
        if (v < 0) continue;
        int w = other_neighbor(g, v, u);
        Configuration c{ConfigKind::S2, {u, v, w}, -1, {v},
                        {{v, w}, {u, v}}, ExtendStrategy::greedy};
        return c;
    }
    // S3: 3-vertex with two 2-neighbors u, w; w is removed, z its other
    // neighbor; color wz then vw.
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 3) continue;
        std::vector<int> twos;
        for (int x : g.neighbors(v))
            if (g.degree(x) == 2) twos.push_back(x);
        if (twos.size() < 2) continue;
        std::sort(twos.begin(), twos.end());
        int w = twos[0], u = twos[1];
        int z = other_neighbor(g, w, v);
        Configuration c{ConfigKind::S3, {v, u, w, z}, -1, {w},
                        {{w, z}, {v, w}}, ExtendStrategy::greedy};
        return c;
    }
    // S4: 6-face incident to a 2-vertex.
    const auto& faces = e.faces();
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        if (faces[fi].length() != 6) continue;
        auto walk = faces[fi].vertex_walk();
        int v0 = -1;
        for (int v : walk)
            if (g.degree(v) == 2 && (v0 < 0 || v < v0)) v0 = v;
        if (v0 < 0) continue;
        if (!distinct_vertices(walk))
            throw std::logic_error("degenerate 6-face despite minimum degree 2");
        Configuration c{ConfigKind::S4, rotate_walk(walk, v0),
                        static_cast<int>(fi), {v0}, {},
                        ExtendStrategy::six_face_repair};
        return c;
    }
    // S5: 7-face with two incident 2-vertices. After S1-S3 the two sit at
    // circular gap 3 (gaps 1 and 2 would be S2/S3), the arrangement the
    // extension relies on.
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        if (faces[fi].length() != 7) continue;
        auto walk = faces[fi].vertex_walk();
        std::vector<int> pos;
        for (int i = 0; i < 7; ++i)
            if (g.degree(walk[i]) == 2) pos.push_back(i);
        if (pos.size() < 2) continue;
        if (!distinct_vertices(walk))
            throw std::logic_error("degenerate 7-face despite minimum degree 2");
        if (pos.size() != 2)
            throw std::logic_error("7-face with >2 2-vertices after S2/S3");
        int gap = (pos[1] - pos[0] + 7) % 7;
        int start;
        if (gap == 3)
            start = (pos[0] + 5) % 7;  // v2 = walk[pos0]
        else if (gap == 4)
            start = (pos[1] + 5) % 7;  // v2 = walk[pos1]
        else
            throw std::logic_error("7-face 2-vertices not at gap 3 after S2/S3");
        std::vector<int> v(7);
        for (int t = 0; t < 7; ++t) v[t] = walk[(start + t) % 7];
        int u3 = third_neighbor(g, v[3], v[2], v[4]);
        int u4 = third_neighbor(g, v[4], v[3], v[5]);
        Configuration c{ConfigKind::S5, v, static_cast<int>(fi),
                        {v[2], v[3], v[4], v[5]}, {},
                        ExtendStrategy::seven_face_ordered};
        c.witness.push_back(u3);
        c.witness.push_back(u4);
        return c;
    }
    return std::nullopt;
}

namespace {

void record_step(ReductionStats* stats, ConfigKind kind, std::pair<int, int> edge,
                 int free_before) {
    if (stats) stats->steps.push_back({kind, edge, free_before});
}

void extend_greedy(const PlaneEmbedding& e, StrongColoring& col,
                   const Configuration& cfg, ReductionStats* stats) {
    const Graph& g = e.graph();
    for (auto [a, b] : cfg.extension) {
        int eid = g.edge_id(a, b);
        auto free = free_colors(g, col, eid);
        record_step(stats, cfg.kind, {a, b}, static_cast<int>(free.size()));
        if (free.empty())
            throw IrreducibleGraphError(
                std::string("extension infeasible at configuration ") +
                    to_string(cfg.kind),
                write_graph_text(e));
        col.color[eid] = free.front();
    }
}

// Exhaustive completion over the given uncolored edges, colors tried in
// ascending order; everything else stays frozen.
bool exhaustive_assign(const Graph& g, StrongColoring& col,
                       const std::vector<int>& edges, size_t at) {
    if (at == edges.size()) return true;
    int eid = edges[at];
    for (int c : free_colors(g, col, eid)) {
        col.color[eid] = c;
        if (exhaustive_assign(g, col, edges, at + 1)) return true;
        col.color[eid] = kUncolored;
    }
    return false;
}

StrongColoring lift_coloring(const Graph& parent, const ReducedEmbedding& red,
                             const StrongColoring& sub, int palette) {
    StrongColoring col = StrongColoring::empty(parent.edge_count(), palette);
    const Graph& child = red.embedding.graph();
    for (int e = 0; e < child.edge_count(); ++e) {
        auto [a, b] = child.edge(e);
        int pe = parent.edge_id(red.parent_vertex[a], red.parent_vertex[b]);
        col.color[pe] = sub.color[e];
    }
    return col;
}

// Direct patterns for graphs of maximum degree <= 2 (disjoint unions of
// paths and cycles). Paths take 3 colors; cycles 3 when 3 | n, 5 for the
// 5-cycle, 4 otherwise via 012-blocks and 0123-blocks.
StrongColoring base_max_degree_two(const Graph& g, int palette) {
    StrongColoring col = StrongColoring::empty(g.edge_count(), palette);
    int n = g.vertex_count();
    std::vector<char> visited(n, 0);

    auto walk_from = [&](int start, int forbidden) {
        // path of vertices from start, never stepping back
        std::vector<int> path{start};
        visited[start] = 1;
        int prev = forbidden, at = start;
        while (true) {
            int next = -1;
            for (int w : g.neighbors(at))
                if (w != prev && !visited[w]) {
                    next = w;
                    break;
                }
            if (next < 0) break;
            visited[next] = 1;
            path.push_back(next);
            prev = at;
            at = next;
        }
        return path;
    };

    // paths first: start at endpoints
    for (int v = 0; v < n; ++v) {
        if (visited[v] || g.degree(v) != 1) continue;
        auto path = walk_from(v, -1);
        for (size_t i = 0; i + 1 < path.size(); ++i)
            col.color[g.edge_id(path[i], path[i + 1])] = static_cast<int>(i % 3);
    }
    // remaining unvisited non-isolated vertices lie on cycles
    for (int v = 0; v < n; ++v) {
        if (visited[v] || g.degree(v) == 0) continue;
        auto cycle = walk_from(v, -1);
        int len = static_cast<int>(cycle.size());
        std::vector<int> pattern;
        if (len % 3 == 0) {
            for (int i = 0; i < len; ++i) pattern.push_back(i % 3);
        } else if (len == 5) {
            pattern = {0, 1, 2, 3, 4};
        } else {
            int b = (len % 3 == 1) ? 1 : 2;
            int a = (len - 4 * b) / 3;
            for (int i = 0; i < a; ++i) pattern.insert(pattern.end(), {0, 1, 2});
            for (int i = 0; i < b; ++i)
                pattern.insert(pattern.end(), {0, 1, 2, 3});
        }
        for (int i = 0; i < len; ++i) {
            int u = cycle[i], w = cycle[(i + 1) % len];
            col.color[g.edge_id(u, w)] = pattern[i];
        }
    }
    return col;
}

std::string dump(const PlaneEmbedding& e) { return write_graph_text(e); }

StrongColoring reduce_subcubic(const PlaneEmbedding& e, ReductionStats* stats);

void apply_extension(const PlaneEmbedding& e, StrongColoring& col,
                     const Configuration& cfg, ReductionStats* stats) {
    switch (cfg.strategy) {
        case ExtendStrategy::greedy:
            extend_greedy(e, col, cfg, stats);
            break;
        case ExtendStrategy::six_face_repair:
            col = repair_six_face(e, col, e.faces()[cfg.face], cfg.witness[0],
                                  stats);
            break;
        case ExtendStrategy::seven_face_ordered:
            col = extend_seven_face(e, col, e.faces()[cfg.face], stats);
            break;
    }
}

StrongColoring reduce_subcubic(const PlaneEmbedding& e, ReductionStats* stats) {
    const Graph& g = e.graph();
    if (g.edge_count() == 0) return StrongColoring::empty(0, 9);
    if (g.max_degree() <= 2) return base_max_degree_two(g, 9);

    auto cfg = find_config_subcubic(e);
    if (!cfg)
        throw IrreducibleGraphError(
            "irreducible graph encountered (no S-configuration)", dump(e));
    if (stats) ++stats->config_counts[cfg->kind];

    ReducedEmbedding red = remove_vertices(e, cfg->removal);
    StrongColoring sub = reduce_subcubic(red.embedding, stats);
    StrongColoring col = lift_coloring(g, red, sub, 9);
    apply_extension(e, col, *cfg, stats);
    return col;
}

StrongColoring reduce_general(const PlaneEmbedding& e, int palette,
                              ReductionStats* stats) {
    const Graph& g = e.graph();
    if (g.edge_count() == 0)
        return StrongColoring::empty(0, palette);
    if (g.max_degree() <= 3) {
        StrongColoring col = reduce_subcubic(e, stats);
        col.palette = palette;  // 9 colors embed into 3*Delta+6
        return col;
    }

    auto cfg = find_config_general(e);
    if (!cfg)
        throw IrreducibleGraphError(
            "irreducible graph encountered (no K-configuration)", dump(e));
    if (stats) ++stats->config_counts[cfg->kind];

    ReducedEmbedding red = remove_vertices(e, cfg->removal);
    StrongColoring sub = reduce_general(red.embedding, palette, stats);
    StrongColoring col = lift_coloring(g, red, sub, palette);
    extend_greedy(e, col, *cfg, stats);
    return col;
}

void certify(const PlaneEmbedding& e, const StrongColoring& col, int budget,
             const char* which) {
    Verdict v = verify_strong(e.graph(), col);
    if (!v.valid)
        throw std::logic_error(std::string(which) +
                               " produced an invalid coloring");
    if (col.used_colors() > budget)
        throw std::logic_error(std::string(which) + " exceeded its budget");
}

}  // namespace

StrongColoring color_girth6(const PlaneEmbedding& e, ReductionStats* stats) {
    const Graph& g = e.graph();
    if (girth(g) < 6)
        throw std::invalid_argument("girth must be at least 6");
    if (g.max_degree() < 4)
        throw std::invalid_argument("maximum degree must be at least 4");
    int budget = 3 * g.max_degree() + 6;
    StrongColoring col = reduce_general(e, budget, stats);
    certify(e, col, budget, "color_girth6");
    return col;
}

StrongColoring color_subcubic_girth6(const PlaneEmbedding& e,
                                     ReductionStats* stats) {
    const Graph& g = e.graph();
    if (g.max_degree() > 3)
        throw std::invalid_argument("maximum degree must be at most 3");
    if (girth(g) < 6)
        throw std::invalid_argument("girth must be at least 6");
    StrongColoring col = reduce_subcubic(e, stats);
    if (static_cast<int>(col.color.size()) != g.edge_count())
        col.color.resize(g.edge_count(), kUncolored);
    certify(e, col, 9, "color_subcubic_girth6");
    return col;
}

StrongColoring repair_six_face(const PlaneEmbedding& e,
                               const StrongColoring& partial, const Face& face,
                               int v0, ReductionStats* stats) {
    const Graph& g = e.graph();
    if (face.length() != 6)
        throw std::invalid_argument("repair requires a 6-face");
    if (g.degree(v0) != 2)
        throw std::invalid_argument("v0 must be a 2-vertex");
    auto walk = face.vertex_walk();
    if (!distinct_vertices(walk))
        throw std::invalid_argument("face walk is degenerate");
    walk = rotate_walk(walk, v0);

    std::vector<int> face_edges(6);
    for (int i = 0; i < 6; ++i)
        face_edges[i] = g.edge_id(walk[i], walk[(i + 1) % 6]);
    int e01 = face_edges[0];
    int e50 = face_edges[5];

    for (int id = 0; id < g.edge_count(); ++id) {
        bool must_be_uncolored = (id == e01 || id == e50);
        if (partial.assigned(id) == must_be_uncolored)
            throw std::invalid_argument(
                "exactly the two edges at v0 must be uncolored");
    }

    StrongColoring col = partial;
    // The usual case: v0v5 always has a free color (at most 8 colored
    // edges in its 2-neighborhood), and if the nine colored edges around
    // v0v1 repeat a color, v0v1 does too.
    auto f50 = free_colors(g, col, e50);
    if (!f50.empty()) {
        col.color[e50] = f50.front();
        auto f01 = free_colors(g, col, e01);
        if (!f01.empty()) {
            col.color[e01] = f01.front();
            record_step(stats, ConfigKind::S4, {walk[5], walk[0]},
                        static_cast<int>(f50.size()));
            record_step(stats, ConfigKind::S4, {walk[0], walk[1]},
                        static_cast<int>(f01.size()));
            if (stats) ++stats->six_face_greedy;
            return col;
        }
        col.color[e50] = kUncolored;
    }

    // Recolor within the face only, everything else frozen.
    col = partial;
    for (int id : face_edges) col.color[id] = kUncolored;
    if (!exhaustive_assign(g, col, face_edges, 0))
        throw NoCompletionError("six-face repair found no completion");
    if (stats) ++stats->six_face_exhaustive;
    return col;
}

StrongColoring extend_seven_face(const PlaneEmbedding& e,
                                 const StrongColoring& partial,
                                 const Face& face, ReductionStats* stats) {
    const Graph& g = e.graph();
    if (face.length() != 7)
        throw std::invalid_argument("extension requires a 7-face");
    auto walk = face.vertex_walk();
    if (!distinct_vertices(walk))
        throw std::invalid_argument("face walk is degenerate");

    std::vector<int> pos;
    for (int i = 0; i < 7; ++i)
        if (g.degree(walk[i]) == 2) pos.push_back(i);
    if (pos.size() != 2)
        throw std::invalid_argument("face must carry exactly two 2-vertices");
    int gap = (pos[1] - pos[0] + 7) % 7;
    int start;
    if (gap == 3)
        start = (pos[0] + 5) % 7;
    else if (gap == 4)
        start = (pos[1] + 5) % 7;
    else
        throw std::invalid_argument("2-vertices are not in the unique arrangement");
    std::vector<int> v(7);
    for (int t = 0; t < 7; ++t) v[t] = walk[(start + t) % 7];
    int u3 = third_neighbor(g, v[3], v[2], v[4]);
    int u4 = third_neighbor(g, v[4], v[3], v[5]);

    int e12 = g.edge_id(v[1], v[2]), e23 = g.edge_id(v[2], v[3]),
        e34 = g.edge_id(v[3], v[4]), e45 = g.edge_id(v[4], v[5]),
        e56 = g.edge_id(v[5], v[6]), e3u = g.edge_id(v[3], u3),
        e4u = g.edge_id(v[4], u4);
    std::vector<int> seven = {e12, e23, e34, e45, e56, e3u, e4u};
    for (int id = 0; id < g.edge_count(); ++id) {
        bool must_be_uncolored =
            std::find(seven.begin(), seven.end(), id) != seven.end();
        if (partial.assigned(id) == must_be_uncolored)
            throw std::invalid_argument(
                "exactly the seven extension edges must be uncolored");
    }

    StrongColoring col = partial;
    bool ok = [&]() {
        auto f4u = free_colors(g, col, e4u);
        if (f4u.empty()) return false;
        record_step(stats, ConfigKind::S5, {v[4], u4},
                    static_cast<int>(f4u.size()));
        col.color[e4u] = f4u.front();

        // v3v4 is in the 2-neighborhood of v1v2: choose its color so that
        // v1v2 keeps at least 3 free colors.
        auto f34 = free_colors(g, col, e34);
        auto f12 = free_colors(g, col, e12);
        int chosen = -1;
        for (int c : f34) {
            int would_remain = static_cast<int>(f12.size()) -
                               (std::count(f12.begin(), f12.end(), c) ? 1 : 0);
            if (would_remain >= 3) {
                chosen = c;
                break;
            }
        }
        if (chosen < 0) return false;
        record_step(stats, ConfigKind::S5, {v[3], v[4]},
                    static_cast<int>(f34.size()));
        col.color[e34] = chosen;

        const std::pair<int, std::pair<int, int>> rest[] = {
            {e3u, {v[3], u3}}, {e56, {v[5], v[6]}}, {e45, {v[4], v[5]}},
            {e23, {v[2], v[3]}}, {e12, {v[1], v[2]}}};
        for (auto [eid, ends] : rest) {
            auto f = free_colors(g, col, eid);
            if (f.empty()) return false;
            record_step(stats, ConfigKind::S5, ends, static_cast<int>(f.size()));
            col.color[eid] = f.front();
        }
        return true;
    }();

    if (ok) {
        if (stats) ++stats->seven_face_ordered;
        return col;
    }

    col = partial;
    if (!exhaustive_assign(g, col, seven, 0))
        throw NoCompletionError("seven-face extension found no completion");
    if (stats) ++stats->seven_face_fallback;
    return col;
}

AutoResult color_auto(const PlaneEmbedding& e, ReductionStats* stats) {
    const Graph& g = e.graph();
    if (girth(g) < 6)
        throw std::invalid_argument(
            "girth must be at least 6 (use the exact solver or the greedy "
            "baseline below girth 6)");
    AutoResult out;
    if (g.max_degree() <= 3) {
        out.coloring = color_subcubic_girth6(e, stats);
        out.palette_bound = 9;
        out.used_subcubic = true;
    } else {
        out.coloring = color_girth6(e, stats);
        out.palette_bound = 3 * g.max_degree() + 6;
        out.used_subcubic = false;
    }
    out.colors_used = out.coloring.used_colors();
    return out;
}

}  // namespace secg
