#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "mac/graph.hpp"

namespace mac {

// Steiner triple system S(2,3,n): every unordered point pair lies in
// exactly one block; exists iff n is 1 or 3 mod 6.
struct TripleSystem {
  int points = 0;
  std::vector<std::array<int, 3>> blocks;  // each block sorted ascending
};

// Bose construction for n = 3 (mod 6), Skolem construction for
// n = 1 (mod 6); every emitted system is coverage-checked. Requires
// n >= 7 and n = 1 or 3 (mod 6).
TripleSystem gen_sts(int n);

// True iff every pair of points is covered exactly once and the block
// count is n(n-1)/6.
bool validate_sts(const TripleSystem& ts);

// Per block {x, y, z}: vertices v_x, v_y, v_z (one pendant-path vertex
// per point) and a hub w, with edges u_x v_x, u_y v_y, u_z v_z and
// v_x w, v_y w, v_z w. Any coloring giving two points of a block equal
// colors forces equal sums on two neighbors of that block's hub, so the
// points must receive pairwise distinct colors.
Graph expand_sts(const TripleSystem& ts);

// Vertex layout of expand_sts: points first, then per-block quadruples.
struct ExpansionBlockVertices {
  std::array<Vertex, 3> leg;  // v for each point of the block, in order
  Vertex hub;                 // w
};
ExpansionBlockVertices expansion_block_vertices(const TripleSystem& ts,
                                                int block_index);

// Erdos-Renyi sample resampled until is_good passes; deterministic
// given the seed. Throws RetriesExhaustedError after max_retries bad
// draws.
Graph random_good_graph(int n, double edge_probability, std::uint64_t seed,
                        int max_retries = 200);

}  // namespace mac
