#include "mac/verify.hpp"

#include <algorithm>

#include "mac/errors.hpp"

namespace mac {
namespace detail {

bool fits_word_path(const Graph& g, const Coloring& c) {
  const long long cap = 1LL << 62;
  const long long delta = std::max(1, g.max_degree());
  for (const BigInt& x : c.values) {
    if (x > cap / delta) return false;
  }
  return true;
}

}  // namespace detail

namespace {

// Shared skeleton for the plain and mod-k verifiers over any integer
// representation with ordering and subtraction.
template <class Int, class SumAt>
ViolationReport scan_majorities(const Graph& g, SumAt&& sum_at) {
  const int n = g.order();
  std::vector<Int> sums(n);
#pragma omp parallel for schedule(static) if (n > 512)
  for (int v = 0; v < n; ++v) sums[v] = sum_at(v);

  std::vector<char> bad(n, 0);
  std::vector<Int> bad_value(n);
#pragma omp parallel for schedule(dynamic, 64) if (n > 512)
  for (int u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    std::vector<Int> local;
    local.reserve(d);
    for (Vertex v : nb) local.push_back(sums[v]);
    std::sort(local.begin(), local.end());
    int run = 1;
    for (int i = 1; i < d; ++i) {
      run = local[i] == local[i - 1] ? run + 1 : 1;
      if (2 * run > d) {
        bad[u] = 1;
        bad_value[u] = local[i];
        break;
      }
    }
  }

  ViolationReport report;
  for (int u = 0; u < n; ++u) {
    if (!bad[u]) continue;
    Violation violation;
    violation.u = u;
    violation.sum = BigInt(bad_value[u]);
    for (Vertex v : g.neighbors(u)) {
      if (sums[v] == bad_value[u]) violation.witnesses.push_back(v);
    }
    report.violations.push_back(std::move(violation));
  }
  return report;
}

}  // namespace

ViolationReport verify(const Graph& g, const Coloring& c) {
  require_coloring_for(g, c);
  if (detail::fits_word_path(g, c)) {
    std::vector<long long> colors(g.order());
    for (int v = 0; v < g.order(); ++v) {
      colors[v] = c[v].convert_to<long long>();
    }
    return scan_majorities<long long>(g, [&](int v) {
      long long acc = 0;
      for (Vertex w : g.neighbors(v)) acc += colors[w];
      return acc;
    });
  }
  return scan_majorities<BigInt>(
      g, [&](int v) { return neighbor_sum(g, c, v); });
}

ViolationReport mod_verify(const Graph& g, const Coloring& c, long long k) {
  if (k < 1) throw PreconditionError("modulus k must be >= 1");
  require_coloring_for(g, c);
  for (int v = 0; v < c.size(); ++v) {
    if (c[v] > k) {
      throw PreconditionError("color of vertex " + std::to_string(v) +
                              " exceeds k");
    }
  }
  const long long cap = 1LL << 62;
  const long long delta = std::max(1, g.max_degree());
  if (k <= cap / delta) {
    std::vector<long long> colors(g.order());
    for (int v = 0; v < g.order(); ++v) {
      colors[v] = c[v].convert_to<long long>();
    }
    return scan_majorities<long long>(g, [&](int v) {
      long long acc = 0;
      for (Vertex w : g.neighbors(v)) acc += colors[w];
      return acc % k;
    });
  }
  return scan_majorities<BigInt>(
      g, [&](int v) { return neighbor_sum(g, c, v) % k; });
}

}  // namespace mac
