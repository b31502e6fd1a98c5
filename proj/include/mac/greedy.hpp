#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "mac/bigint.hpp"
#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

// The set of shifts delta such that moving c(u) to c(u) + delta breaks
// the coloring, with one source entry per (witness vertex, group pair).
// For a valid input coloring the total count is at most
// 2 * Delta * (Delta - 1), which is what caps the greedy colors.
struct ForbiddenDeltas {
  struct Source {
    Vertex witness;       // the vertex w where the violation would appear
    BigInt delta;         // s(B_j) - s(A_i)
    int group_a_size;     // |A_i|, neighbors of w whose sums shift
    int group_b_size;     // |B_j|, neighbors of w whose sums stay put
  };

  std::set<BigInt> deltas;
  std::vector<Source> sources;

  bool contains(const BigInt& delta) const { return deltas.count(delta) > 0; }
};

// Vertices whose violation status can change when c(u) moves: exactly
// those w with both A = N(u) ∩ N(w) and B = N(w) \ A non-empty. When B
// is empty every neighbor sum of w shifts by the same amount, so the
// multiplicities at w are unchanged.
std::vector<Vertex> affected_vertices(const Graph& g, Vertex u);

// Requires verify(g, c) to be empty.
ForbiddenDeltas forbidden_deltas(const Graph& g, const Coloring& c, Vertex u);

struct GreedyOptions {
  // Processing order; must be a permutation of 0..n-1. Default is
  // ascending vertex index.
  std::optional<std::vector<Vertex>> order;
  // Called after each step with (step index, vertex, coloring so far).
  std::function<void(int, Vertex, const Coloring&)> on_progress;
};

// Starts from powers_init and lowers each color in turn to the smallest
// positive integer that keeps the coloring majority additive. The
// result is valid with max color <= 2 * Delta * (Delta - 1) + 1, and
// every intermediate coloring is valid as well. Throws NotGoodError if
// the graph admits no coloring.
Coloring greedy_recolor(const Graph& g, const GreedyOptions& options = {});

// 2 * Delta * (Delta - 1) + 1.
long long greedy_color_bound(const Graph& g);

}  // namespace mac
