#pragma once

#include <set>

#include "mac/coloring.hpp"
#include "mac/goodness.hpp"
#include "mac/graph.hpp"
#include "mac/verify.hpp"

namespace mac::reference {

// Serial implementations that follow the definitions literally, with
// no shared state or precomputation. They are deliberately independent
// of the production kernels: tests and the benchmark target compare the
// two, so keep these slow and obvious.

// Recomputes each neighbor sum in place and counts multiplicities with
// an ordered map.
ViolationReport verify(const Graph& g, const Coloring& c);
ViolationReport mod_verify(const Graph& g, const Coloring& c, long long k);

// Checks every pair (u, R subset of N(u)) for the blocking condition
// 2|R| > d(u) > 1 with pairwise identical open neighborhoods. Degrees
// above 25 are rejected (subset enumeration), which is plenty for the
// corpora this oracle is used on.
GoodnessWitness is_good(const Graph& g);

// New colors in [lo, hi] for vertex u that would break the coloring,
// found by assigning each candidate and re-running verify.
std::set<BigInt> invalid_recolorings(const Graph& g, const Coloring& c,
                                     Vertex u, long long lo, long long hi);

// Full enumeration of all k^n colorings; true iff one verifies.
// Guarded at k^n <= 10^8.
bool brute_force(const Graph& g, long long k);

// Proper-coloring decision by plain backtracking (ground truth for the
// subdivision reduction tests).
bool is_k_colorable(const Graph& g, int k);

}  // namespace mac::reference
