#include "mac/reference.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mac/errors.hpp"

namespace mac::reference {

ViolationReport verify(const Graph& g, const Coloring& c) {
  require_coloring_for(g, c);
  ViolationReport report;
  for (int u = 0; u < g.order(); ++u) {
    const int d = g.degree(u);
    if (d < 2) continue;
    std::map<BigInt, std::vector<Vertex>> by_sum;
    for (Vertex v : g.neighbors(u)) {
      BigInt s = 0;
      for (Vertex w : g.neighbors(v)) s += c[w];
      by_sum[s].push_back(v);
    }
    for (const auto& [s, group] : by_sum) {
      if (2 * static_cast<int>(group.size()) > d) {
        report.violations.push_back({u, s, group});
      }
    }
  }
  return report;
}

ViolationReport mod_verify(const Graph& g, const Coloring& c, long long k) {
  if (k < 1) throw PreconditionError("modulus k must be >= 1");
  require_coloring_for(g, c);
  ViolationReport report;
  for (int u = 0; u < g.order(); ++u) {
    const int d = g.degree(u);
    if (d < 2) continue;
    std::map<BigInt, std::vector<Vertex>> by_residue;
    for (Vertex v : g.neighbors(u)) {
      BigInt s = 0;
      for (Vertex w : g.neighbors(v)) s += c[w];
      by_residue[s % k].push_back(v);
    }
    for (const auto& [s, group] : by_residue) {
      if (2 * static_cast<int>(group.size()) > d) {
        report.violations.push_back({u, s, group});
      }
    }
  }
  return report;
}

GoodnessWitness is_good(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(u);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    if (d > 25) throw TooLargeError("reference is_good limited to degree 25");
    for (unsigned mask = 1; mask < (1u << d); ++mask) {
      if (2 * __builtin_popcount(mask) <= d) continue;
      std::vector<Vertex> group;
      for (int i = 0; i < d; ++i) {
        if (mask & (1u << i)) group.push_back(nb[i]);
      }
      bool all_equal = true;
      for (std::size_t i = 1; i < group.size() && all_equal; ++i) {
        auto a = g.neighbors(group[0]);
        auto b = g.neighbors(group[i]);
        all_equal = std::equal(a.begin(), a.end(), b.begin(), b.end());
      }
      if (all_equal) {
        GoodnessWitness w;
        w.good = false;
        w.u = u;
        w.group = group;
        return w;
      }
    }
  }
  return GoodnessWitness{};
}

std::set<BigInt> invalid_recolorings(const Graph& g, const Coloring& c,
                                     Vertex u, long long lo, long long hi) {
  std::set<BigInt> bad;
  Coloring probe = c;
  for (long long candidate = lo; candidate <= hi; ++candidate) {
    probe[u] = candidate;
    if (!reference::verify(g, probe).valid()) bad.insert(BigInt(candidate));
  }
  return bad;
}

bool brute_force(const Graph& g, long long k) {
  const int n = g.order();
  if (k < 1) throw PreconditionError("k must be >= 1");
  double states = n * std::log(static_cast<double>(k));
  if (states > std::log(1e8) + 1e-9) {
    throw TooLargeError("brute force limited to k^n <= 1e8");
  }
  std::vector<long long> colors(n, 1);
  Coloring c = Coloring::from_ints(colors);
  while (true) {
    for (int v = 0; v < n; ++v) c[v] = colors[v];
    if (reference::verify(g, c).valid()) return true;
    int pos = 0;
    while (pos < n && colors[pos] == k) {
      colors[pos] = 1;
      ++pos;
    }
    if (pos == n) return false;
    ++colors[pos];
  }
}

namespace {

bool color_extends(const Graph& g, std::vector<int>& assigned, int v, int k) {
  if (v == g.order()) return true;
  for (int t = 1; t <= k; ++t) {
    bool ok = true;
    for (Vertex w : g.neighbors(v)) {
      if (w < v && assigned[w] == t) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    assigned[v] = t;
    if (color_extends(g, assigned, v + 1, k)) return true;
  }
  assigned[v] = 0;
  return false;
}

}  // namespace

bool is_k_colorable(const Graph& g, int k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  std::vector<int> assigned(g.order(), 0);
  return color_extends(g, assigned, 0, k);
}

}  // namespace mac::reference
