#pragma once

#include <vector>

#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

// Either "good" or a blocking vertex u together with a set R of
// neighbors of u, |R| > d(u)/2 > 1/2 and d(u) > 1, all with identical
// open neighborhoods. Such a pair rules out every coloring, because
// the members of R share their neighbor sum under any coloring.
struct GoodnessWitness {
  bool good = true;
  Vertex u = -1;
  std::vector<Vertex> group;  // R, sorted ascending
};

// Goodness test: groups each vertex's neighbors by canonical (sorted)
// neighbor list and looks for a class larger than half the degree.
GoodnessWitness is_good(const Graph& g);

// The universal coloring c(v_i) = 2^i. Distinct subset sums make all
// neighbor sums of distinct neighborhoods distinct, so it verifies on
// every good graph (and fails exactly on the is_good obstruction).
Coloring powers_init(const Graph& g);

// True iff the all-ones coloring is majority additive, i.e. no vertex
// of degree >= 2 has more than half its neighbors of equal degree.
bool one_mac_check(const Graph& g);

}  // namespace mac
