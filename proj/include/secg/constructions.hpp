#pragma once

#include "secg/coloring.hpp"
#include "secg/embedding.hpp"
#include "secg/rational.hpp"

namespace secg {

// C_k^d: odd cycle of length k with d-2 pendant leaves on each cycle
// vertex. Cycle vertices are 0..k-1, the leaves of cycle vertex i are
// k + i*(d-2) .. k + (i+1)*(d-2) - 1. Cycle edges get ids 0..k-1 (edge i
// joins i and (i+1) mod k), pendant edges follow grouped by cycle vertex.
struct CkdSpec {
    int k = 0;  // odd, >= 3; equals the girth
    int d = 0;  // >= 3; degree of the cycle vertices

    void validate() const;
    int ell() const;              // ceil(2(d-2)/(k-1))
    int t() const;                // ceil((d-2)/ell)
    int pendant_palette() const;  // 2(d-2) + ell
};

PlaneEmbedding gen_ckd(const CkdSpec& spec);

// Partial coloring of the pendant edges only, from the modular formula;
// uses exactly pendant_palette() colors and is strong on C_k^d.
StrongColoring pendant_coloring_ckd(const CkdSpec& spec);

// Extends a pendant coloring with fresh colors on the cycle edges (the
// k-cycle is solved exactly, needing 3, 4 or 5 of them). Verifies the
// result and throws if the formula coloring fails verification.
StrongColoring complete_ckd_coloring(const CkdSpec& spec,
                                     const StrongColoring& pendants);

// Complement of C_6: two triangles {0,2,4}, {1,3,5} plus the matching
// {0,3},{1,4},{2,5}. 3-regular, planar, 9 edges.
PlaneEmbedding gen_prism();

// Hexagonal-lattice patch with the given number of rings (rings=1 is a
// hexagon, rings=2 the 7-cell flower). All bounded faces are 6-faces.
PlaneEmbedding gen_hex_patch(int rings);

// Replaces an edge by a path through `times` new 2-vertices. New
// vertices are appended after the existing ids.
PlaneEmbedding subdivide(const PlaneEmbedding& e, int edge_id, int times);

// Bound evaluators, exact ceiling arithmetic throughout.
long long ckd_lower_bound(int k, int d);              // ceil(2k(d-1)/(k-1))
long long ckd_upper_bound(int k, int d);              // ceil(2k(d-2)/(k-1)) + 5
long long conjecture_bound(int k, int max_degree, long long c);
long long erdos_nesetril_bound(int max_degree);       // 5/4 D^2, odd case (5D^2-2D+1)/4
Rat molloy_reed_bound(int max_degree);                // 1.998 D^2 exactly

}  // namespace secg
