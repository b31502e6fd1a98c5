#pragma once

#include <vector>

#include "mac/bigint.hpp"
#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

// One failed vertex: more than half the neighbors of u share the
// neighbor sum `sum`; `witnesses` lists that majority group.
struct Violation {
  Vertex u;
  BigInt sum;
  std::vector<Vertex> witnesses;

  bool operator==(const Violation& other) const = default;
};

struct ViolationReport {
  std::vector<Violation> violations;

  bool valid() const { return violations.empty(); }
  bool violates_at(Vertex u) const {
    for (const auto& v : violations) {
      if (v.u == u) return true;
    }
    return false;
  }
};

// Majority additive verifier. Lists every vertex u of degree >= 2 for
// which strictly more than d(u)/2 neighbors share a neighbor sum;
// vertices of degree <= 1 are unconstrained and never appear.
ViolationReport verify(const Graph& g, const Coloring& c);

// Same check on neighbor sums reduced modulo k; colors must lie in [k].
// An empty mod report implies an empty plain report.
ViolationReport mod_verify(const Graph& g, const Coloring& c, long long k);

namespace detail {

// True when every color fits a machine word and no neighbor sum can
// overflow: max_color * max_degree stays below 2^62.
bool fits_word_path(const Graph& g, const Coloring& c);

}  // namespace detail

}  // namespace mac
