#include "mac/generators.hpp"

#include <algorithm>

#include "mac/errors.hpp"
#include "mac/goodness.hpp"
#include "mac/rng.hpp"

namespace mac {

namespace {

std::array<int, 3> sorted_block(int a, int b, int c) {
  std::array<int, 3> block{a, b, c};
  std::sort(block.begin(), block.end());
  return block;
}

// n = 3m with m odd: points are Z_m x {0,1,2}, indexed 3*i + layer.
// Uses the idempotent commutative quasigroup i*j = (i+j)/2 over Z_m.
TripleSystem bose(int n) {
  const int m = n / 3;
  const int half = (m + 1) / 2;  // inverse of 2 mod m, m odd
  auto point = [](int i, int layer) { return 3 * i + layer; };

  TripleSystem ts;
  ts.points = n;
  for (int i = 0; i < m; ++i) {
    ts.blocks.push_back(sorted_block(point(i, 0), point(i, 1), point(i, 2)));
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int mid = static_cast<int>(
          (static_cast<long long>(i + j) * half) % m);
      for (int layer = 0; layer < 3; ++layer) {
        ts.blocks.push_back(sorted_block(point(i, layer), point(j, layer),
                                         point(mid, (layer + 1) % 3)));
      }
    }
  }
  return ts;
}

// n = 6t + 1: points are Z_{2t} x {0,1,2} plus one extra point at
// index n - 1. Uses the half-idempotent commutative quasigroup
// x*y = pi((x+y) mod 2t) with pi(2i) = i and pi(2i+1) = t + i.
TripleSystem skolem(int n) {
  const int t = (n - 1) / 6;
  const int q = 2 * t;
  auto pi = [t](int x) { return x % 2 == 0 ? x / 2 : t + (x - 1) / 2; };
  auto op = [&](int x, int y) { return pi((x + y) % (2 * t)); };
  auto point = [](int i, int layer) { return 3 * i + layer; };
  const int infinity = n - 1;

  TripleSystem ts;
  ts.points = n;
  for (int i = 0; i < t; ++i) {
    ts.blocks.push_back(sorted_block(point(i, 0), point(i, 1), point(i, 2)));
  }
  for (int i = 0; i < t; ++i) {
    for (int layer = 0; layer < 3; ++layer) {
      ts.blocks.push_back(sorted_block(infinity, point(t + i, layer),
                                       point(i, (layer + 1) % 3)));
    }
  }
  for (int x = 0; x < q; ++x) {
    for (int y = x + 1; y < q; ++y) {
      for (int layer = 0; layer < 3; ++layer) {
        ts.blocks.push_back(sorted_block(point(x, layer), point(y, layer),
                                         point(op(x, y), (layer + 1) % 3)));
      }
    }
  }
  return ts;
}

}  // namespace

bool validate_sts(const TripleSystem& ts) {
  const int n = ts.points;
  if (static_cast<long long>(ts.blocks.size()) !=
      static_cast<long long>(n) * (n - 1) / 6) {
    return false;
  }
  std::vector<char> covered(static_cast<std::size_t>(n) * n, 0);
  for (const auto& block : ts.blocks) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const int a = block[i], b = block[j];
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) return false;
        auto& flag = covered[static_cast<std::size_t>(a) * n + b];
        if (flag) return false;
        flag = 1;
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!covered[static_cast<std::size_t>(a) * n + b]) return false;
    }
  }
  return true;
}

TripleSystem gen_sts(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3)) {
    throw PreconditionError(
        "Steiner triple systems need n >= 7 with n = 1 or 3 (mod 6), got " +
        std::to_string(n));
  }
  TripleSystem ts = n % 6 == 3 ? bose(n) : skolem(n);
  if (!validate_sts(ts)) {
    throw Error("internal: generated triple system fails pair coverage");
  }
  return ts;
}

ExpansionBlockVertices expansion_block_vertices(const TripleSystem& ts,
                                                int block_index) {
  const int base = ts.points + 4 * block_index;
  return {{base, base + 1, base + 2}, base + 3};
}

Graph expand_sts(const TripleSystem& ts) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(ts.blocks.size() * 6);
  for (std::size_t b = 0; b < ts.blocks.size(); ++b) {
    const auto verts = expansion_block_vertices(ts, static_cast<int>(b));
    for (int i = 0; i < 3; ++i) {
      edges.emplace_back(ts.blocks[b][i], verts.leg[i]);
      edges.emplace_back(verts.leg[i], verts.hub);
    }
  }
  const int n = ts.points + 4 * static_cast<int>(ts.blocks.size());
  return Graph::from_edges(n, edges);
}

Graph random_good_graph(int n, double edge_probability, std::uint64_t seed,
                        int max_retries) {
  Rng rng(seed);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.bernoulli(edge_probability)) edges.emplace_back(u, v);
      }
    }
    Graph g = Graph::from_edges(n, edges);
    if (is_good(g).good) return g;
  }
  throw RetriesExhaustedError("no good graph found in " +
                              std::to_string(max_retries) + " samples");
}

}  // namespace mac
