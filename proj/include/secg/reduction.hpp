#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "secg/coloring.hpp"
#include "secg/embedding.hpp"

namespace secg {

// Reducible configurations. K1..K6 drive the 3*Delta+6 algorithm for
// planar girth >= 6, S1..S5 the 9-color subcubic one. Detectors scan in
// this order with smallest-witness tie-breaks, so runs are reproducible.
enum class ConfigKind { K1, K2, K3, K4, K5, K6, S1, S2, S3, S4, S5 };

const char* to_string(ConfigKind k);

enum class ExtendStrategy { greedy, six_face_repair, seven_face_ordered };

struct Configuration {
    ConfigKind kind;
    // Role-specific labels:
    //   K1/K2: {v, u}                 v the 1-vertex, u its neighbor
    //   K3:    {v, u, w}              v the 2-vertex
    //   K4:    {v}
    //   K5:    {v, u, w?}             u the removed 2^- neighbor, w its
    //                                 other neighbor when u has degree 2
    //   K6:    {v, u_1..u_j}
    //   S1:    {v, u?}                u absent for isolated vertices
    //   S2:    {u, v, w}              v removed, w its other neighbor
    //   S3:    {v, u, w, z}           w removed, z its other neighbor
    //   S4:    {v0..v5}               face walk, v0 the 2-vertex
    //   S5:    {v0..v6, u3, u4}       face walk, v2/v5 the 2-vertices
    std::vector<int> witness;
    int face = -1;  // face index for S4/S5
    std::vector<int> removal;
    // Edges to color on the way back, as endpoint pairs in this graph,
    // in coloring order (only meaningful for the greedy strategy).
    std::vector<std::pair<int, int>> extension;
    ExtendStrategy strategy = ExtendStrategy::greedy;
};

// Lowest-numbered applicable kind, smallest witness first; nullopt only
// if nothing applies (impossible for plane graphs of girth >= 6 in the
// respective class).
std::optional<Configuration> find_config_general(const PlaneEmbedding& e);
std::optional<Configuration> find_config_subcubic(const PlaneEmbedding& e);

// Raised when a graph in scope of one of the theorems admits no
// configuration or no extension; carries the instance so it is never
// lost (such a graph would be a counterexample).
struct IrreducibleGraphError : std::runtime_error {
    IrreducibleGraphError(const std::string& what, std::string dump)
        : std::runtime_error(what), graph_dump(std::move(dump)) {}
    std::string graph_dump;
};

struct NoCompletionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReductionStats {
    struct Step {
        ConfigKind kind;
        std::pair<int, int> edge;  // endpoints in the graph of that level
        int free_before;           // free colors at the moment of coloring
    };
    std::vector<Step> steps;
    std::map<ConfigKind, int> config_counts;
    int six_face_greedy = 0;       // repairs settled without recoloring
    int six_face_exhaustive = 0;   // repairs that needed the full search
    int seven_face_ordered = 0;    // proof-order extensions that went through
    int seven_face_fallback = 0;   // extensions that fell back to search
};

// chi'_s <= 3*Delta + 6 for planar girth >= 6 with Delta >= 4. The
// palette is fixed from the input's maximum degree; the result is
// verified and its color count checked against the budget before return.
StrongColoring color_girth6(const PlaneEmbedding& e,
                            ReductionStats* stats = nullptr);

// chi'_s <= 9 for subcubic planar girth >= 6.
StrongColoring color_subcubic_girth6(const PlaneEmbedding& e,
                                     ReductionStats* stats = nullptr);

// Lemma-17 step: all edges colored except the two at the 2-vertex v0 of
// a 6-face. Completes by recoloring face edges only: first the greedy
// no-recoloring path, then exhaustive search over the <= 6 face edges.
StrongColoring repair_six_face(const PlaneEmbedding& e,
                               const StrongColoring& partial, const Face& face,
                               int v0, ReductionStats* stats = nullptr);

// Lemma-18 step: 7-face with two 2-vertices in the unique arrangement,
// its five face edges v1v2..v5v6 plus v3u3, v4u4 uncolored. Colors v4u4,
// then v3v4 so that v1v2 keeps >= 3 free colors, then the rest greedily;
// falls back to exhaustive search over the seven edges.
StrongColoring extend_seven_face(const PlaneEmbedding& e,
                                 const StrongColoring& partial,
                                 const Face& face,
                                 ReductionStats* stats = nullptr);

struct AutoResult {
    StrongColoring coloring;
    int palette_bound = 0;  // 9 or 3*Delta+6
    int colors_used = 0;
    bool used_subcubic = false;
};

// Dispatch on Delta: subcubic algorithm for Delta <= 3, general one for
// Delta >= 4. Requires girth >= 6.
AutoResult color_auto(const PlaneEmbedding& e, ReductionStats* stats = nullptr);

}  // namespace secg
