#include "mac/exact.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "mac/errors.hpp"
#include "mac/goodness.hpp"
#include "mac/greedy.hpp"
#include "mac/verify.hpp"

namespace mac {

namespace {

std::vector<Vertex> search_order(const Graph& g) {
  auto order = g.bfs_order();
  std::stable_sort(order.begin(), order.end(), [&g](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

struct SearchState {
  const Graph* g = nullptr;
  long long k = 1;
  std::vector<long long> color;        // 0 = unassigned
  std::vector<long long> partial_sum;  // over assigned neighbors
  std::vector<int> uncolored;          // count of unassigned neighbors

  explicit SearchState(const Graph& graph, long long colors)
      : g(&graph),
        k(colors),
        color(graph.order(), 0),
        partial_sum(graph.order(), 0),
        uncolored(graph.order(), 0) {
    for (int v = 0; v < graph.order(); ++v) uncolored[v] = graph.degree(v);
  }

  void assign(Vertex v, long long t) {
    color[v] = t;
    for (Vertex w : g->neighbors(v)) {
      partial_sum[w] += t;
      --uncolored[w];
    }
  }

  void unassign(Vertex v, long long t) {
    color[v] = 0;
    for (Vertex w : g->neighbors(v)) {
      partial_sum[w] -= t;
      ++uncolored[w];
    }
  }

  // True when w already has a group of more than d(w)/2 neighbors whose
  // final sums are forced equal: equal partial sums plus identical sets
  // of uncolored neighbors (every completion shifts them in lockstep).
  bool forced_majority_at(Vertex w) const {
    const auto nb = g->neighbors(w);
    const int d = static_cast<int>(nb.size());
    if (d < 2) return false;

    struct Key {
      long long sum;
      std::vector<Vertex> pending;
      bool operator<(const Key& o) const {
        return sum != o.sum ? sum < o.sum : pending < o.pending;
      }
      bool operator==(const Key& o) const = default;
    };
    std::vector<Key> keys;
    keys.reserve(d);
    for (Vertex a : nb) {
      Key key;
      key.sum = partial_sum[a];
      if (uncolored[a] > 0) {
        key.pending.reserve(uncolored[a]);
        for (Vertex x : g->neighbors(a)) {
          if (color[x] == 0) key.pending.push_back(x);
        }
      }
      keys.push_back(std::move(key));
    }
    std::sort(keys.begin(), keys.end());
    int run = 1;
    for (int i = 1; i < d; ++i) {
      run = keys[i] == keys[i - 1] ? run + 1 : 1;
      if (2 * run > d) return true;
    }
    return false;
  }

  // Checks the vertices whose forced-majority status can change after
  // assigning v: v itself, its neighbors, and their neighbors.
  bool prune_after(Vertex v) const {
    if (forced_majority_at(v)) return true;
    for (Vertex w : g->neighbors(v)) {
      if (forced_majority_at(w)) return true;
    }
    std::vector<Vertex> second;
    for (Vertex w : g->neighbors(v)) {
      for (Vertex x : g->neighbors(w)) second.push_back(x);
    }
    std::sort(second.begin(), second.end());
    second.erase(std::unique(second.begin(), second.end()), second.end());
    for (Vertex x : second) {
      if (x != v && !g->has_edge(x, v) && forced_majority_at(x)) return true;
    }
    return false;
  }

  // At a full assignment every partial sum is the true neighbor sum.
  bool complete_and_valid() const {
    for (int u = 0; u < g->order(); ++u) {
      const auto nb = g->neighbors(u);
      const int d = static_cast<int>(nb.size());
      if (d < 2) continue;
      std::vector<long long> sums;
      sums.reserve(d);
      for (Vertex v : nb) sums.push_back(partial_sum[v]);
      std::sort(sums.begin(), sums.end());
      int run = 1;
      for (int i = 1; i < d; ++i) {
        run = sums[i] == sums[i - 1] ? run + 1 : 1;
        if (2 * run > d) return false;
      }
    }
    return true;
  }
};

struct SharedSearch {
  std::atomic<long long> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<bool> found{false};
  long long budget = 0;
};

bool dfs(SearchState& state, const std::vector<Vertex>& order, int idx,
         SharedSearch& shared) {
  if (idx == static_cast<int>(order.size())) {
    return state.complete_and_valid();
  }
  const Vertex v = order[idx];
  for (long long t = 1; t <= state.k; ++t) {
    if (shared.found.load(std::memory_order_relaxed)) return false;
    if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >=
        shared.budget) {
      shared.budget_hit.store(true, std::memory_order_relaxed);
      return false;
    }
    state.assign(v, t);
    if (!state.prune_after(v) && dfs(state, order, idx + 1, shared)) {
      return true;
    }
    state.unassign(v, t);
  }
  return false;
}

}  // namespace

SearchOutcome decide_kmac(const Graph& g, long long k,
                          const SearchOptions& options) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const long long sum_cap = 1LL << 62;
  if (g.max_degree() > 0 && k > sum_cap / g.max_degree()) {
    throw TooLargeError("k too large for machine-word sums");
  }

  SearchOutcome outcome;
  const int n = g.order();
  if (n == 0) {
    outcome.verdict = Verdict::kYes;
    outcome.coloring = Coloring();
    return outcome;
  }

  const auto order = search_order(g);
  SharedSearch shared;
  shared.budget = options.budget;

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1 || k == 1 || k > 4096) {
    SearchState state(g, k);
    if (dfs(state, order, 0, shared)) {
      outcome.verdict = Verdict::kYes;
      outcome.coloring = Coloring::from_ints(state.color);
    } else {
      outcome.verdict = shared.budget_hit ? Verdict::kUnknown : Verdict::kNo;
    }
  } else {
    // Split the root vertex's color branches; the early-exit flag is the
    // only cross-worker signal. The verdict is deterministic; among the
    // recorded witnesses the smallest root color is kept.
    std::vector<std::optional<std::vector<long long>>> witnesses(k);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (long long t = 1; t <= k; ++t) {
      if (shared.found.load(std::memory_order_relaxed)) continue;
      SearchState state(g, k);
      if (shared.nodes.fetch_add(1, std::memory_order_relaxed) >=
          shared.budget) {
        shared.budget_hit.store(true, std::memory_order_relaxed);
        continue;
      }
      state.assign(order[0], t);
      if (!state.prune_after(order[0]) && dfs(state, order, 1, shared)) {
        witnesses[t - 1] = state.color;
        shared.found.store(true, std::memory_order_relaxed);
      }
    }
    for (long long t = 0; t < k; ++t) {
      if (witnesses[t]) {
        outcome.verdict = Verdict::kYes;
        outcome.coloring = Coloring::from_ints(*witnesses[t]);
        break;
      }
    }
    if (!outcome.coloring) {
      outcome.verdict = shared.budget_hit ? Verdict::kUnknown : Verdict::kNo;
    }
  }

  outcome.nodes = shared.nodes.load();
  outcome.budget_hit = shared.budget_hit.load();
  if (outcome.budget_hit && outcome.verdict == Verdict::kNo) {
    outcome.verdict = Verdict::kUnknown;
  }
  return outcome;
}

ChiResult chi_mac(const Graph& g, const SearchOptions& options) {
  ChiResult result;
  if (!is_good(g).good) {
    result.status = ChiResult::Status::kNotGood;
    return result;
  }
  if (one_mac_check(g)) {
    result.status = ChiResult::Status::kValue;
    result.value = 1;
    return result;
  }
  const long long bound = greedy_color_bound(g);
  for (long long k = 2; k <= bound; ++k) {
    SearchOutcome outcome = decide_kmac(g, k, options);
    result.nodes += outcome.nodes;
    if (outcome.verdict == Verdict::kUnknown) {
      result.status = ChiResult::Status::kUnknown;
      return result;
    }
    if (outcome.verdict == Verdict::kYes) {
      result.status = ChiResult::Status::kValue;
      result.value = k;
      return result;
    }
  }
  throw Error("internal: no coloring found within the greedy bound");
}

namespace {

struct MajorityScratch {
  std::vector<long long> sums;
  std::vector<long long> local;
};

bool coloring_is_valid(const Graph& g, const std::vector<long long>& colors,
                       MajorityScratch& scratch) {
  const int n = g.order();
  scratch.sums.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    long long acc = 0;
    for (Vertex w : g.neighbors(v)) acc += colors[w];
    scratch.sums[v] = acc;
  }
  for (int u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    scratch.local.clear();
    for (Vertex v : nb) scratch.local.push_back(scratch.sums[v]);
    std::sort(scratch.local.begin(), scratch.local.end());
    int run = 1;
    for (int i = 1; i < d; ++i) {
      run = scratch.local[i] == scratch.local[i - 1] ? run + 1 : 1;
      if (2 * run > d) return false;
    }
  }
  return true;
}

}  // namespace

Verdict brute_force_oracle(const Graph& g, long long k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const int n = g.order();
  const double states = n * std::log(static_cast<double>(k));
  if (states > std::log(1e8) + 1e-9) {
    throw TooLargeError("brute force limited to k^n <= 1e8");
  }
  unsigned long long total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<unsigned long long>(k);

  std::atomic<bool> found{false};
  const unsigned long long chunk = std::max<unsigned long long>(
      1, total / 256);

#pragma omp parallel for schedule(dynamic, 1)
  for (unsigned long long lo = 0; lo < total; lo += chunk) {
    if (found.load(std::memory_order_relaxed)) continue;
    const unsigned long long hi = std::min(total, lo + chunk);
    std::vector<long long> colors(n);
    unsigned long long index = lo;
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<long long>(index % k) + 1;
      index /= k;
    }
    MajorityScratch scratch;
    for (unsigned long long i = lo; i < hi; ++i) {
      if ((i & 1023) == 0 && found.load(std::memory_order_relaxed)) break;
      if (coloring_is_valid(g, colors, scratch)) {
        found.store(true, std::memory_order_relaxed);
        break;
      }
      // Odometer increment in base k.
      for (int v = 0; v < n; ++v) {
        if (colors[v] < k) {
          ++colors[v];
          break;
        }
        colors[v] = 1;
      }
    }
  }
  return found.load() ? Verdict::kYes : Verdict::kNo;
}

}  // namespace mac
