#include "mac/goodness.hpp"

#include <algorithm>

#include "mac/verify.hpp"

namespace mac {

namespace {

// Assigns each vertex a class id so that two vertices get the same id
// iff their open neighborhoods are identical.
std::vector<int> neighborhood_classes(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  auto less = [&g](Vertex a, Vertex b) {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    return std::lexicographical_compare(na.begin(), na.end(), nb.begin(),
                                        nb.end());
  };
  std::sort(order.begin(), order.end(), less);

  std::vector<int> cls(n, 0);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0 && less(order[i - 1], order[i])) ++next;
    cls[order[i]] = next;
  }
  return cls;
}

}  // namespace

GoodnessWitness is_good(const Graph& g) {
  const auto cls = neighborhood_classes(g);
  for (int u = 0; u < g.order(); ++u) {
    const auto nb = g.neighbors(u);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    std::vector<int> keys;
    keys.reserve(d);
    for (Vertex v : nb) keys.push_back(cls[v]);
    std::sort(keys.begin(), keys.end());
    int run = 1;
    for (int i = 1; i < d; ++i) {
      run = keys[i] == keys[i - 1] ? run + 1 : 1;
      if (2 * run > d) {
        GoodnessWitness w;
        w.good = false;
        w.u = u;
        // Collect the whole class among N(u), not just the run prefix.
        for (Vertex v : nb) {
          if (cls[v] == keys[i]) w.group.push_back(v);
        }
        return w;
      }
    }
  }
  return GoodnessWitness{};
}

Coloring powers_init(const Graph& g) {
  Coloring c;
  c.values.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    c.values.push_back(BigInt(1) << v);
  }
  return c;
}

bool one_mac_check(const Graph& g) {
  return verify(g, Coloring::uniform(g.order(), 1)).valid();
}

}  // namespace mac
