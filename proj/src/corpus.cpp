#include "secg/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>

#include "secg/constructions.hpp"

namespace secg {

PlaneEmbedding gen_drum(int length) {
    if (length < 3) throw std::invalid_argument("drum length must be >= 3");
    int L = length;
    Graph g(2 * L);
    for (int i = 0; i < L; ++i) g.add_edge(i, (i + 1) % L);          // outer
    for (int i = 0; i < L; ++i) g.add_edge(L + i, L + (i + 1) % L);  // inner
    for (int i = 0; i < L; ++i) g.add_edge(i, L + i);                // spokes
    std::vector<std::vector<int>> rot(2 * L);
    for (int i = 0; i < L; ++i) {
        rot[i] = {(i + 1) % L, L + i, (i + L - 1) % L};
        rot[L + i] = {i, L + (i + 1) % L, L + (i + L - 1) % L};
    }
    return PlaneEmbedding(std::move(g), std::move(rot));
}

namespace {

using Vec3 = std::array<double, 3>;

Vec3 sub(const Vec3& a, const Vec3& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}
Vec3 normalize(const Vec3& a) {
    double l = std::sqrt(dot(a, a));
    return {a[0] / l, a[1] / l, a[2] / l};
}

// Clockwise neighbor order around the outward radial direction; one
// consistent handedness for every vertex yields a sphere embedding.
std::vector<std::vector<int>> rotations_from_points(
    const Graph& g, const std::vector<Vec3>& pos) {
    std::vector<std::vector<int>> rot(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        Vec3 n = normalize(pos[v]);
        Vec3 axis = std::abs(n[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
        Vec3 e1 = normalize(cross(n, axis));
        Vec3 e2 = cross(n, e1);
        rot[v] = g.neighbors(v);
        std::vector<double> ang(rot[v].size());
        for (size_t i = 0; i < rot[v].size(); ++i) {
            Vec3 d = sub(pos[rot[v][i]], pos[v]);
            ang[i] = std::atan2(dot(d, e2), dot(d, e1));
        }
        std::vector<int> idx(rot[v].size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        std::sort(idx.begin(), idx.end(),
                  [&](int a, int b) { return ang[a] > ang[b]; });
        std::vector<int> sorted;
        for (int i : idx) sorted.push_back(rot[v][i]);
        rot[v] = std::move(sorted);
    }
    return rot;
}

}  // namespace

PlaneEmbedding gen_fullerene() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> ico;
    for (double s1 : {1.0, -1.0})
        for (double s2 : {phi, -phi}) {
            ico.push_back({0, s1, s2});
            ico.push_back({s1, s2, 0});
            ico.push_back({s2, 0, s1});
        }
    Graph icog(12);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) {
            Vec3 d = sub(ico[u], ico[v]);
            if (dot(d, d) < 5.0) icog.add_edge(u, v);  // edge length 2
        }
    auto icorot = rotations_from_points(icog, ico);

    // Truncation: one vertex per dart, placed a third of the way along
    // its edge; pentagons follow the icosahedral rotations.
    auto dart_index = [&](int u, int v) {
        return 2 * icog.edge_id(u, v) + (u > v ? 1 : 0);
    };
    std::vector<Vec3> pos(2 * icog.edge_count());
    for (int e = 0; e < icog.edge_count(); ++e) {
        auto [u, v] = icog.edge(e);
        Vec3 d = sub(ico[v], ico[u]);
        pos[dart_index(u, v)] = {ico[u][0] + d[0] / 3, ico[u][1] + d[1] / 3,
                                 ico[u][2] + d[2] / 3};
        pos[dart_index(v, u)] = {ico[v][0] - d[0] / 3, ico[v][1] - d[1] / 3,
                                 ico[v][2] - d[2] / 3};
    }
    Graph g(2 * icog.edge_count());
    for (int e = 0; e < icog.edge_count(); ++e) {
        auto [u, v] = icog.edge(e);
        g.add_edge(dart_index(u, v), dart_index(v, u));
    }
    for (int u = 0; u < 12; ++u) {
        const auto& r = icorot[u];
        for (size_t i = 0; i < r.size(); ++i) {
            int a = dart_index(u, r[i]);
            int b = dart_index(u, r[(i + 1) % r.size()]);
            if (!g.has_edge(a, b)) g.add_edge(a, b);
        }
    }
    return PlaneEmbedding(g, rotations_from_points(g, pos));
}

PlaneEmbedding attach_star(const PlaneEmbedding& e, int host, int leaves,
                           int rotation_slot) {
    const Graph& g = e.graph();
    if (host < 0 || host >= g.vertex_count())
        throw std::invalid_argument("host out of range");
    if (leaves < 1) throw std::invalid_argument("star needs leaves");
    int n = g.vertex_count();
    int center = n;
    Graph g2(n + 1 + leaves);
    for (int id = 0; id < g.edge_count(); ++id) {
        auto [u, v] = g.edge(id);
        g2.add_edge(u, v);
    }
    g2.add_edge(host, center);
    for (int i = 0; i < leaves; ++i) g2.add_edge(center, n + 1 + i);

    std::vector<std::vector<int>> rot(n + 1 + leaves);
    for (int v = 0; v < n; ++v) rot[v] = e.rotation(v);
    int slot = g.degree(host) ? rotation_slot % g.degree(host) : 0;
    rot[host].insert(rot[host].begin() + slot, center);
    rot[center].push_back(host);
    for (int i = 0; i < leaves; ++i) {
        rot[center].push_back(n + 1 + i);
        rot[n + 1 + i] = {center};
    }
    return PlaneEmbedding(std::move(g2), std::move(rot));
}

namespace {

// Subdivides the edges listed as endpoint pairs, each the given number
// of times. Endpoints stay valid across the sequence of subdivisions.
PlaneEmbedding subdivide_pairs(PlaneEmbedding emb,
                               const std::vector<std::pair<int, int>>& pairs,
                               const std::vector<int>& times) {
    for (size_t i = 0; i < pairs.size(); ++i) {
        int id = emb.graph().edge_id(pairs[i].first, pairs[i].second);
        emb = subdivide(emb, id, times[i]);
    }
    return emb;
}

std::vector<std::pair<int, int>> all_edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int e = 0; e < g.edge_count(); ++e) out.push_back(g.edge(e));
    return out;
}

PlaneEmbedding spoke_subdivided_drum(int length) {
    PlaneEmbedding drum = gen_drum(length);
    std::vector<std::pair<int, int>> spokes;
    for (int i = 0; i < length; ++i) spokes.emplace_back(i, length + i);
    return subdivide_pairs(std::move(drum), spokes,
                           std::vector<int>(length, 1));
}

// Two non-adjacent edges of every pentagonal face subdivided once: girth
// rises to 6, no 6-face touches a 2-vertex, and every ex-pentagon is a
// 7-face with two 2-vertices at circular gap 3. The pair is one of the
// five non-adjacent choices per pentagon.
PlaneEmbedding pentagon_subdivided_fullerene(std::mt19937_64& rng) {
    PlaneEmbedding f = gen_fullerene();
    std::vector<std::pair<int, int>> chosen;
    for (const Face& face : f.faces()) {
        if (face.length() != 5) continue;
        auto walk = face.vertex_walk();
        int a = static_cast<int>(rng() % 5);
        int b = (a + 2) % 5;
        chosen.emplace_back(walk[a], walk[(a + 1) % 5]);
        chosen.emplace_back(walk[b], walk[(b + 1) % 5]);
    }
    return subdivide_pairs(std::move(f), chosen,
                           std::vector<int>(chosen.size(), 1));
}

}  // namespace

std::vector<CorpusInstance> general_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<CorpusInstance> out;
    for (int k : {7, 9, 11, 13, 15})
        for (int d : {4, 5, 6, 7, 8})
            out.push_back({"ckd_" + std::to_string(k) + "_" + std::to_string(d),
                           gen_ckd({k, d})});

    const int variants = 75;
    const int ks[] = {7, 9, 11};
    const int ds[] = {4, 5, 6};
    for (int i = 0; i < variants; ++i) {
        int k = ks[rng() % 3], d = ds[rng() % 3];
        PlaneEmbedding emb = gen_ckd({k, d});
        int nsub = static_cast<int>(rng() % 5);
        for (int s = 0; s < nsub; ++s) {
            int edge = static_cast<int>(rng() % emb.graph().edge_count());
            int times = 1 + static_cast<int>(rng() % 3);
            emb = subdivide(emb, edge, times);
        }
        int nstars = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < nstars; ++s) {
            int host = static_cast<int>(rng() % emb.graph().vertex_count());
            int leaves = 4 + static_cast<int>(rng() % 3);
            int slot = static_cast<int>(rng() % 8);
            emb = attach_star(emb, host, leaves, slot);
        }
        out.push_back({"ckd_var_" + std::to_string(i), std::move(emb)});
    }
    return out;
}

std::vector<CorpusInstance> subcubic_corpus(std::uint64_t seed) {
    std::mt19937_64 rng(seed + 1);
    std::vector<CorpusInstance> out;
    for (int rings = 1; rings <= 4; ++rings)
        out.push_back({"hex_" + std::to_string(rings), gen_hex_patch(rings)});
    for (int L = 6; L <= 11; ++L)
        out.push_back({"drum" + std::to_string(L) + "_spokes",
                       spoke_subdivided_drum(L)});
    for (int i = 0; i < 4; ++i)
        out.push_back({"fullerene_pentasub_" + std::to_string(i),
                       pentagon_subdivided_fullerene(rng)});

    for (int i = 0; i < 43; ++i) {
        PlaneEmbedding emb = gen_prism();
        auto pairs = all_edge_pairs(emb.graph());
        std::vector<int> times;
        for (size_t p = 0; p < pairs.size(); ++p)
            times.push_back(1 + static_cast<int>(rng() % 3));
        out.push_back({"prism_sub_" + std::to_string(i),
                       subdivide_pairs(std::move(emb), pairs, times)});
    }
    for (int i = 0; i < 43; ++i) {
        int rings = 1 + static_cast<int>(rng() % 3);
        PlaneEmbedding emb = gen_hex_patch(rings);
        auto pairs = all_edge_pairs(emb.graph());
        std::vector<std::pair<int, int>> chosen;
        std::vector<int> times;
        for (auto& p : pairs)
            if (rng() % 5 < 2) {
                chosen.push_back(p);
                times.push_back(1 + static_cast<int>(rng() % 2));
            }
        out.push_back({"hex_sub_" + std::to_string(i),
                       subdivide_pairs(std::move(emb), chosen, times)});
    }
    return out;
}

std::vector<CorpusInstance> extra_corpus() {
    std::vector<CorpusInstance> out;
    out.push_back({"prism", gen_prism()});
    {
        Graph g(2);
        g.add_edge(0, 1);
        out.push_back({"single_edge",
                       PlaneEmbedding(g, {{1}, {0}})});
    }
    {
        Graph g(4);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(2, 3);
        out.push_back({"path4", PlaneEmbedding(g, {{1}, {0, 2}, {1, 3}, {2}})});
    }
    {
        Graph g(6);
        std::vector<std::vector<int>> rot(6);
        for (int i = 1; i <= 5; ++i) {
            g.add_edge(0, i);
            rot[0].push_back(i);
            rot[i] = {0};
        }
        out.push_back({"star5", PlaneEmbedding(std::move(g), std::move(rot))});
    }
    out.push_back({"c6", gen_hex_patch(1)});
    out.push_back({"ckd_3_3", gen_ckd({3, 3})});
    out.push_back({"ckd_3_4", gen_ckd({3, 4})});
    out.push_back({"ckd_5_3", gen_ckd({5, 3})});
    return out;
}

std::vector<CorpusInstance> full_corpus(std::uint64_t seed) {
    std::vector<CorpusInstance> out = general_corpus(seed);
    for (auto& inst : subcubic_corpus(seed)) out.push_back(std::move(inst));
    for (auto& inst : extra_corpus()) out.push_back(std::move(inst));
    return out;
}

}  // namespace secg
