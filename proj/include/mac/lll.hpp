#pragma once

#include <cstdint>
#include <optional>

#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

// Result of the private neighbor condition: every neighbor v of every
// vertex u of degree >= 2 must have some w in N(v) whose neighborhood
// meets N[u] exactly in {v}. delta_small is the minimum degree among
// vertices of degree >= 2 (absent when there are none).
struct PncReport {
  bool satisfied = true;
  Vertex u = -1;  // first failing pair, when unsatisfied
  Vertex v = -1;
  std::optional<int> delta_small;
};

PncReport private_neighbor_check(const Graph& g);

// ceil(4 * e^3 * Delta^(4 / floor(delta/2))), evaluated at 50 and 100
// decimal digits; the two ceilings must agree. Requires Delta >= 2 and
// delta >= 2.
long long lll_k(int max_degree, int delta_small);

// Independent uniform colors in [1, k]; deterministic given the seed.
Coloring sample_coloring(const Graph& g, long long k, std::uint64_t seed);

struct LllOptions {
  std::uint64_t seed = 0;
  long long max_resamples = 1'000'000;
  std::optional<long long> k_override;
};

struct LllResult {
  Coloring coloring;
  long long k = 1;
  long long resamples = 0;
};

// Constructive realization of the sampling argument: draw uniformly,
// then while some vertex u sees a majority of equal mod-k neighbor
// sums, redraw the colors of everything that determines those sums
// (the union of N(v) over v in N(u)). Violated events are handled in
// ascending vertex order; only vertices within distance 4 of the
// resampled event are rechecked. Throws PncViolatedError when the
// private neighbor condition fails and BudgetExceededError when
// max_resamples runs out.
LllResult lll_color(const Graph& g, const LllOptions& options = {});

}  // namespace mac
