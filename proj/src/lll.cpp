#include "mac/lll.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <set>

#include "mac/errors.hpp"
#include "mac/rng.hpp"
#include "mac/verify.hpp"

namespace mac {

namespace {

// N(w) ∩ N[u] == {v}, i.e. w sees v but nothing else around u.
bool is_private_neighbor(const Graph& g, Vertex w, Vertex u, Vertex v) {
  for (Vertex x : g.neighbors(w)) {
    if (x == v) continue;
    if (x == u || g.has_edge(x, u)) return false;
  }
  // w is adjacent to v by choice of w, so the intersection is {v}.
  return true;
}

}  // namespace

PncReport private_neighbor_check(const Graph& g) {
  PncReport report;
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 2) continue;
    if (!report.delta_small || g.degree(u) < *report.delta_small) {
      report.delta_small = g.degree(u);
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    if (g.degree(u) < 2) continue;
    for (Vertex v : g.neighbors(u)) {
      bool found = false;
      for (Vertex w : g.neighbors(v)) {
        if (is_private_neighbor(g, w, u, v)) {
          found = true;
          break;
        }
      }
      if (!found) {
        report.satisfied = false;
        report.u = u;
        report.v = v;
        return report;
      }
    }
  }
  return report;
}

namespace {

template <class Float>
long long lll_k_at_precision(int max_degree, int delta_small) {
  const Float e3 = exp(Float(3));
  const Float exponent = Float(4) / Float(delta_small / 2);
  const Float value = 4 * e3 * pow(Float(max_degree), exponent);
  const Float up = ceil(value);
  if (up > Float(1LL << 62)) {
    throw TooLargeError("lll_k exceeds the machine-word budget");
  }
  return up.template convert_to<long long>();
}

}  // namespace

long long lll_k(int max_degree, int delta_small) {
  if (max_degree < 2 || delta_small < 2) {
    throw PreconditionError("lll_k requires Delta >= 2 and delta >= 2");
  }
  using F50 = boost::multiprecision::cpp_bin_float_50;
  using F100 = boost::multiprecision::cpp_bin_float_100;
  const long long k50 = lll_k_at_precision<F50>(max_degree, delta_small);
  const long long k100 = lll_k_at_precision<F100>(max_degree, delta_small);
  if (k50 != k100) {
    throw Error("internal: lll_k ceiling did not stabilize across precisions");
  }
  return k100;
}

Coloring sample_coloring(const Graph& g, long long k, std::uint64_t seed) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  Rng rng(seed);
  std::vector<long long> colors(g.order());
  for (int v = 0; v < g.order(); ++v) colors[v] = rng.range(1, k);
  return Coloring::from_ints(colors);
}

namespace {

bool mod_majority_at(const Graph& g, const std::vector<long long>& shat,
                     Vertex u) {
  const auto nb = g.neighbors(u);
  const int d = static_cast<int>(nb.size());
  if (d < 2) return false;
  std::vector<long long> keys;
  keys.reserve(d);
  for (Vertex v : nb) keys.push_back(shat[v]);
  std::sort(keys.begin(), keys.end());
  int run = 1;
  for (int i = 1; i < d; ++i) {
    run = keys[i] == keys[i - 1] ? run + 1 : 1;
    if (2 * run > d) return true;
  }
  return false;
}

}  // namespace

LllResult lll_color(const Graph& g, const LllOptions& options) {
  const int n = g.order();

  bool any_deg2 = false;
  for (int v = 0; v < n && !any_deg2; ++v) any_deg2 = g.degree(v) >= 2;
  if (!any_deg2) {
    // Nothing is constrained; the all-ones coloring works.
    return {Coloring::uniform(n, 1), 1, 0};
  }

  const PncReport pnc = private_neighbor_check(g);
  if (!pnc.satisfied) {
    throw PncViolatedError(pnc.u, pnc.v,
                           "private neighbor condition fails at (" +
                               std::to_string(pnc.u) + ", " +
                               std::to_string(pnc.v) + ")");
  }

  const long long k =
      options.k_override ? *options.k_override
                         : lll_k(g.max_degree(), *pnc.delta_small);
  if (k < 1) throw PreconditionError("k override must be >= 1");
  const long long cap = 1LL << 62;
  if (k > cap / std::max(1, g.max_degree())) {
    throw TooLargeError("modulus too large for machine-word sums");
  }

  Rng rng(options.seed);
  std::vector<long long> colors(n);
  for (int v = 0; v < n; ++v) colors[v] = rng.range(1, k);

  std::vector<long long> shat(n);
  auto recompute_shat = [&](Vertex v) {
    long long acc = 0;
    for (Vertex w : g.neighbors(v)) acc += colors[w];
    shat[v] = acc % k;
  };
  for (int v = 0; v < n; ++v) recompute_shat(v);

  std::set<Vertex> violated;
  for (int v = 0; v < n; ++v) {
    if (mod_majority_at(g, shat, v)) violated.insert(v);
  }

  long long resamples = 0;
  while (!violated.empty()) {
    const Vertex u = *violated.begin();
    if (resamples >= options.max_resamples) {
      throw BudgetExceededError("resample budget exhausted after " +
                                std::to_string(resamples) + " resamples");
    }
    ++resamples;

    // The variables determining the sums around u.
    std::set<Vertex> variables;
    for (Vertex v : g.neighbors(u)) {
      for (Vertex w : g.neighbors(v)) variables.insert(w);
    }
    for (Vertex w : variables) colors[w] = rng.range(1, k);

    // Sums change within distance 1 of the redrawn set and event status
    // within one more step; both stay inside the distance-4 ball of u.
    std::set<Vertex> sums_dirty;
    for (Vertex w : variables) {
      for (Vertex x : g.neighbors(w)) sums_dirty.insert(x);
    }
    for (Vertex x : sums_dirty) recompute_shat(x);

    std::set<Vertex> recheck = sums_dirty;
    for (Vertex x : sums_dirty) {
      for (Vertex z : g.neighbors(x)) recheck.insert(z);
    }
    for (Vertex z : recheck) {
      if (mod_majority_at(g, shat, z)) {
        violated.insert(z);
      } else {
        violated.erase(z);
      }
    }
  }

  LllResult result;
  result.coloring = Coloring::from_ints(colors);
  result.k = k;
  result.resamples = resamples;
  // Residue collisions dominate plain collisions, so an empty mod
  // report forces an empty plain report; keep the cheap cross-check.
  if (!verify(g, result.coloring).valid()) {
    throw Error("internal: mod-clean coloring failed plain verification");
  }
  return result;
}

}  // namespace mac
