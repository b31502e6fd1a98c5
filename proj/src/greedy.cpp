#include "mac/greedy.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "mac/errors.hpp"
#include "mac/goodness.hpp"
#include "mac/verify.hpp"

namespace mac {

std::vector<Vertex> affected_vertices(const Graph& g, Vertex u) {
  std::vector<char> in_nu(g.order(), 0);
  for (Vertex v : g.neighbors(u)) in_nu[v] = 1;

  std::vector<Vertex> out;
  std::vector<char> visited(g.order(), 0);
  for (Vertex v : g.neighbors(u)) {
    for (Vertex w : g.neighbors(v)) {
      if (visited[w]) continue;
      visited[w] = 1;
      int a = 0;
      for (Vertex x : g.neighbors(w)) a += in_nu[x];
      if (a > 0 && a < g.degree(w)) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Lazily computed neighbor sums, shared across the affected vertices of
// one recoloring step.
class SumCache {
 public:
  SumCache(const Graph& g, const Coloring& c) : g_(g), c_(c) {}

  const BigInt& at(Vertex v) {
    auto it = cache_.find(v);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(v, neighbor_sum(g_, c_, v)).first->second;
  }

 private:
  const Graph& g_;
  const Coloring& c_;
  std::unordered_map<Vertex, BigInt> cache_;
};

ForbiddenDeltas forbidden_deltas_unchecked(const Graph& g, Vertex u,
                                           SumCache& sums) {
  ForbiddenDeltas out;
  std::vector<char> in_nu(g.order(), 0);
  for (Vertex v : g.neighbors(u)) in_nu[v] = 1;

  for (Vertex w : affected_vertices(g, u)) {
    const int d = g.degree(w);
    // Group A (sums shift with c(u)) and B (sums stay) by sum value.
    std::map<BigInt, int> groups_a, groups_b;
    for (Vertex v : g.neighbors(w)) {
      (in_nu[v] ? groups_a : groups_b)[sums.at(v)] += 1;
    }
    for (const auto& [sa, ca] : groups_a) {
      for (const auto& [sb, cb] : groups_b) {
        if (2 * (ca + cb) > d) {
          // Merging A_i into B_j needs exactly this shift.
          BigInt delta = sb - sa;
          out.deltas.insert(delta);
          out.sources.push_back({w, std::move(delta), ca, cb});
        }
      }
    }
  }
  return out;
}

}  // namespace

ForbiddenDeltas forbidden_deltas(const Graph& g, const Coloring& c, Vertex u) {
  if (!verify(g, c).valid()) {
    throw PreconditionError(
        "forbidden_deltas requires a valid majority additive coloring");
  }
  SumCache sums(g, c);
  return forbidden_deltas_unchecked(g, u, sums);
}

long long greedy_color_bound(const Graph& g) {
  const long long delta = g.max_degree();
  return 2 * delta * (delta - 1) + 1;
}

Coloring greedy_recolor(const Graph& g, const GreedyOptions& options) {
  const int n = g.order();
  auto witness = is_good(g);
  if (!witness.good) {
    throw NotGoodError("graph admits no majority additive coloring (vertex " +
                       std::to_string(witness.u) + ")");
  }

  std::vector<Vertex> order;
  if (options.order) {
    order = *options.order;
    std::vector<char> seen(n, 0);
    if (static_cast<int>(order.size()) != n) {
      throw PreconditionError("order must be a permutation of the vertices");
    }
    for (Vertex v : order) {
      if (v < 0 || v >= n || seen[v]) {
        throw PreconditionError("order must be a permutation of the vertices");
      }
      seen[v] = 1;
    }
  } else {
    order.resize(n);
    for (int v = 0; v < n; ++v) order[v] = v;
  }

  Coloring c = powers_init(g);
  const long long bound = greedy_color_bound(g);
  for (int step = 0; step < n; ++step) {
    const Vertex u = order[step];
    SumCache sums(g, c);
    const auto forbidden = forbidden_deltas_unchecked(g, u, sums);
    // The forbidden set has at most 2*Delta*(Delta-1) elements, so some
    // candidate in [1, bound] always survives.
    bool placed = false;
    for (long long candidate = 1; candidate <= bound; ++candidate) {
      if (!forbidden.contains(BigInt(candidate) - c[u])) {
        c[u] = candidate;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw Error("internal: no candidate color within the greedy bound at " +
                  std::to_string(u));
    }
    if (options.on_progress) options.on_progress(step, u, c);
  }
  return c;
}

}  // namespace mac
