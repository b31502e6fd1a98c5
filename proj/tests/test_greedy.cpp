#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mac/errors.hpp"
#include "mac/generators.hpp"
#include "mac/goodness.hpp"
#include "mac/greedy.hpp"
#include "mac/reference.hpp"
#include "mac/verify.hpp"
#include "test_util.hpp"

using namespace mac;

TEST_CASE("affected vertices") {
  // K2: no vertex has both a shifting and a fixed neighbor sum.
  Graph k2 = testutil::complete_graph(2);
  CHECK(affected_vertices(k2, 0).empty());

  // C5: only the two vertices at distance 2 qualify; the neighbors of u
  // have no neighbor inside N(u) at all.
  Graph c5 = testutil::cycle_graph(5);
  CHECK(affected_vertices(c5, 0) == std::vector<Vertex>{2, 3});

  Graph isolated = Graph::from_edges(3, {{1, 2}});
  CHECK(affected_vertices(isolated, 0).empty());
}

TEST_CASE("forbidden deltas on C5 from the powers coloring") {
  Graph c5 = testutil::cycle_graph(5);
  Coloring c = powers_init(c5);
  auto fd = forbidden_deltas(c5, c, 0);
  CHECK(fd.deltas == std::set<BigInt>{BigInt(1), BigInt(15)});

  // The scan oracle over candidate colors 1..50 must flag exactly the
  // candidates c(u) + delta.
  auto scanned = reference::invalid_recolorings(c5, c, 0, 1, 50);
  std::set<BigInt> predicted;
  for (const BigInt& delta : fd.deltas) {
    BigInt candidate = c[0] + delta;
    if (candidate >= 1 && candidate <= 50) predicted.insert(candidate);
  }
  CHECK(scanned == predicted);
}

TEST_CASE("degree-zero vertex has no forbidden deltas") {
  Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}});
  Coloring c = powers_init(g);
  CHECK(forbidden_deltas(g, c, 0).deltas.empty());
}

TEST_CASE("forbidden_deltas requires a valid coloring") {
  Graph p3 = testutil::path_graph(3);
  CHECK_THROWS_AS(forbidden_deltas(p3, Coloring::uniform(3, 1), 1),
                  PreconditionError);
}

TEST_CASE("forbidden deltas agree with the scan oracle on random graphs") {
  Rng rng(555);
  int checked = 0;
  while (checked < 40) {
    const int n = 2 + static_cast<int>(rng.below(9));
    Graph g = testutil::random_graph(n, 0.2 + 0.5 * rng.unit(), rng);
    if (!is_good(g).good) continue;
    ++checked;
    Coloring c = powers_init(g);
    const long long window = 80;
    for (int u = 0; u < n; ++u) {
      auto fd = forbidden_deltas(g, c, u);
      std::set<BigInt> predicted;
      for (const BigInt& delta : fd.deltas) {
        BigInt candidate = c[u] + delta;
        if (candidate >= 1 && candidate <= window) {
          predicted.insert(candidate);
        }
      }
      CHECK(reference::invalid_recolorings(g, c, u, 1, window) == predicted);
    }
  }
}

TEST_CASE("forbidden deltas stay within the charge bound") {
  Rng rng(556);
  int checked = 0;
  while (checked < 60) {
    const int n = 2 + static_cast<int>(rng.below(10));
    Graph g = testutil::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
    if (!is_good(g).good) continue;
    ++checked;
    const long long cap = greedy_color_bound(g) - 1;  // 2*Delta*(Delta-1)
    Coloring c = powers_init(g);
    for (int u = 0; u < n; ++u) {
      auto fd = forbidden_deltas(g, c, u);
      CHECK(static_cast<long long>(fd.sources.size()) <= cap);
      CHECK(static_cast<long long>(fd.deltas.size()) <= cap);
      // The current coloring is valid, so staying put is never bad.
      CHECK_FALSE(fd.contains(BigInt(0)));
    }
  }
}

TEST_CASE("greedy on C5 gives the expected coloring") {
  Graph c5 = testutil::cycle_graph(5);
  Coloring c = greedy_recolor(c5);
  CHECK(c == Coloring::from_ints({1, 2, 1, 2, 3}));
  CHECK(verify(c5, c).valid());
  CHECK(c.max_color() <= greedy_color_bound(c5));
}

TEST_CASE("greedy on the edgeless graph is all ones") {
  Graph g = Graph::from_edges(6, {});
  CHECK(greedy_recolor(g) == Coloring::uniform(6, 1));
}

TEST_CASE("greedy rejects blocked graphs and bad orders") {
  CHECK_THROWS_AS(greedy_recolor(testutil::path_graph(3)), NotGoodError);

  GreedyOptions options;
  options.order = std::vector<Vertex>{0, 0, 1, 2, 3};
  CHECK_THROWS_AS(greedy_recolor(testutil::cycle_graph(5), options),
                  PreconditionError);
}

TEST_CASE("every intermediate greedy coloring stays valid") {
  Rng rng(557);
  int checked = 0;
  while (checked < 25) {
    const int n = 2 + static_cast<int>(rng.below(12));
    Graph g = testutil::random_graph(n, 0.3 + 0.4 * rng.unit(), rng);
    if (!is_good(g).good) continue;
    ++checked;
    GreedyOptions options;
    options.on_progress = [&g](int, Vertex, const Coloring& state) {
      CHECK(reference::verify(g, state).valid());
    };
    Coloring c = greedy_recolor(g, options);
    CHECK(verify(g, c).valid());
    CHECK(c.max_color() <= greedy_color_bound(g));
  }
}

TEST_CASE("greedy respects the bound on larger random good graphs") {
  for (unsigned seed = 0; seed < 30; ++seed) {
    Graph g = random_good_graph(8 + (seed % 30), 0.15 + 0.02 * (seed % 10),
                                seed);
    Coloring c = greedy_recolor(g);
    CHECK(verify(g, c).valid());
    CHECK(c.max_color() <= greedy_color_bound(g));
  }
}

TEST_CASE("custom and random orders also verify") {
  Graph g = random_good_graph(12, 0.3, 4242);
  GreedyOptions options;
  std::vector<Vertex> order(12);
  for (int v = 0; v < 12; ++v) order[v] = v;
  Rng rng(9);
  rng.shuffle(order);
  options.order = order;
  Coloring c = greedy_recolor(g, options);
  CHECK(verify(g, c).valid());
  CHECK(c.max_color() <= greedy_color_bound(g));

  // Determinism: same graph and same order give the same coloring.
  CHECK(greedy_recolor(g, options) == c);
  CHECK(greedy_recolor(g) == greedy_recolor(g));
}
