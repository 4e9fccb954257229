#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secg/embedding.hpp"

namespace secg {

constexpr std::uint64_t kDefaultSeed = 1729;

struct CorpusInstance {
    std::string name;
    PlaneEmbedding emb;
};

// Prism over C_L: two concentric L-cycles joined by a perfect matching
// of spokes. 3-regular, planar, girth min(4, L).
PlaneEmbedding gen_drum(int length);

// Truncated icosahedron: 3-regular, planar, girth 5, 12 pentagonal and
// 20 hexagonal faces.
PlaneEmbedding gen_fullerene();

// Pendant star K_{1,j} attached at host: a new center adjacent to host
// plus j fresh leaves, inserted into the host rotation at the given slot.
PlaneEmbedding attach_star(const PlaneEmbedding& e, int host, int leaves,
                           int rotation_slot);

// >= 100 planar girth >= 6, max degree >= 4 instances: C_k^d bases plus
// seeded subdivided variants with attached 4+-stars.
std::vector<CorpusInstance> general_corpus(std::uint64_t seed = kDefaultSeed);

// >= 100 subcubic planar girth >= 6 instances: hex patches (rings 1-4),
// subdivided prisms and hex patches, a spoke-subdivided drum and a
// pentagon-subdivided fullerene.
std::vector<CorpusInstance> subcubic_corpus(std::uint64_t seed = kDefaultSeed);

// Small named instances for exact-solver and file-format work; not all
// of them have girth >= 6.
std::vector<CorpusInstance> extra_corpus();

// general + subcubic + extras.
std::vector<CorpusInstance> full_corpus(std::uint64_t seed = kDefaultSeed);

}  // namespace secg
