#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "mac/errors.hpp"
#include "mac/lll.hpp"
#include "mac/reductions.hpp"
#include "mac/verify.hpp"
#include "test_util.hpp"

using namespace mac;

TEST_CASE("private neighbor condition") {
  // K4: everything around a vertex is inside its closed neighborhood.
  auto k4 = private_neighbor_check(testutil::complete_graph(4));
  CHECK_FALSE(k4.satisfied);

  auto c7 = private_neighbor_check(testutil::cycle_graph(7));
  CHECK(c7.satisfied);
  CHECK(c7.delta_small == 2);

  // No vertex of degree >= 2: vacuously satisfied, no delta.
  auto k2 = private_neighbor_check(testutil::complete_graph(2));
  CHECK(k2.satisfied);
  CHECK_FALSE(k2.delta_small.has_value());

  auto p3 = private_neighbor_check(testutil::path_graph(3));
  CHECK_FALSE(p3.satisfied);
  CHECK(p3.u == 1);
}

TEST_CASE("color budget values") {
  CHECK(lll_k(10, 4) == 8035);
  CHECK(lll_k(2, 2) == 1286);
  CHECK(lll_k(3, 2) == 6508);
  CHECK_THROWS_AS(lll_k(1, 2), PreconditionError);
  CHECK_THROWS_AS(lll_k(3, 1), PreconditionError);
}

TEST_CASE("color budget monotonicity") {
  for (int delta_small = 2; delta_small <= 8; ++delta_small) {
    for (int max_degree = 2; max_degree <= 12; ++max_degree) {
      const long long here = lll_k(max_degree, delta_small);
      CHECK(lll_k(max_degree + 1, delta_small) >= here);
      CHECK(lll_k(max_degree, delta_small + 1) <= here);
    }
  }
}

TEST_CASE("uniform sampling") {
  Graph c7 = testutil::cycle_graph(7);
  CHECK(sample_coloring(c7, 1, 3) == Coloring::uniform(7, 1));
  CHECK(sample_coloring(c7, 9, 42) == sample_coloring(c7, 9, 42));
  CHECK(sample_coloring(c7, 9, 42) != sample_coloring(c7, 9, 43));

  // Frequencies within 4 sigma of uniform over 1e5 draws at k=5.
  const int draws = 100000;
  const long long k = 5;
  std::array<long long, 6> histogram{};
  for (int seed = 0; seed < draws; ++seed) {
    Coloring c = sample_coloring(testutil::path_graph(1), k, seed);
    histogram[c[0].convert_to<int>()] += 1;
  }
  const double expected = static_cast<double>(draws) / k;
  const double sigma = std::sqrt(expected * (1.0 - 1.0 / k));
  for (int t = 1; t <= k; ++t) {
    CHECK(std::abs(histogram[t] - expected) <= 4 * sigma);
  }
}

TEST_CASE("lll_color on an edgeless graph") {
  Graph g = Graph::from_edges(5, {});
  auto result = lll_color(g);
  CHECK(result.coloring == Coloring::uniform(5, 1));
  CHECK(result.resamples == 0);
  CHECK(result.k == 1);
}

TEST_CASE("lll_color rejects graphs without private neighbors") {
  CHECK_THROWS_AS(lll_color(testutil::complete_graph(4)), PncViolatedError);
}

TEST_CASE("lll_color on C7") {
  Graph c7 = testutil::cycle_graph(7);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LllOptions options;
    options.seed = seed;
    auto result = lll_color(c7, options);
    CHECK(result.k == 1286);
    CHECK(verify(c7, result.coloring).valid());
    CHECK(result.coloring.max_color() <= result.k);
  }
}

TEST_CASE("lll_color on the subdivided Petersen graph") {
  Graph g = subdivide3(testutil::petersen_graph()).graph;
  CHECK(private_neighbor_check(g).satisfied);
  LllOptions options;
  options.seed = 17;
  auto result = lll_color(g, options);
  CHECK(result.k == 6508);
  CHECK(verify(g, result.coloring).valid());
}

TEST_CASE("lll_color determinism and k override") {
  Graph g = subdivide3(testutil::cycle_graph(5)).graph;
  LllOptions options;
  options.seed = 5;
  options.k_override = 12;
  auto a = lll_color(g, options);
  auto b = lll_color(g, options);
  CHECK(a.coloring == b.coloring);
  CHECK(a.k == 12);
  CHECK(verify(g, a.coloring).valid());
}

TEST_CASE("tiny budgets surface as errors") {
  // k forced to 1 makes every degree-2 vertex a violation, so the
  // resampler can never finish.
  Graph g = subdivide3(testutil::cycle_graph(5)).graph;
  LllOptions options;
  options.k_override = 1;
  options.max_resamples = 50;
  CHECK_THROWS_AS(lll_color(g, options), BudgetExceededError);
}

TEST_CASE("resampling only disturbs events within distance 4") {
  Rng rng(808);
  Graph g = subdivide3(testutil::random_graph(8, 0.4, rng)).graph;
  const long long k = 7;  // small modulus so violations are common

  auto status = [&](const Coloring& c) {
    std::vector<char> bad(g.order(), 0);
    auto report = mod_verify(g, c, k);
    for (const auto& v : report.violations) bad[v.u] = 1;
    return bad;
  };

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Coloring c = sample_coloring(g, k, seed);
    auto before = status(c);
    // Pick any violated vertex and redraw its event variables by hand.
    auto report = mod_verify(g, c, k);
    if (report.violations.empty()) continue;
    const Vertex u = report.violations[0].u;
    std::set<Vertex> variables;
    for (Vertex v : g.neighbors(u)) {
      for (Vertex w : g.neighbors(v)) variables.insert(w);
    }
    Rng redraw(seed * 31 + 7);
    for (Vertex w : variables) c[w] = redraw.range(1, k);
    auto after = status(c);

    auto ball = g.ball(u, 4);
    std::vector<char> near(g.order(), 0);
    for (Vertex v : ball) near[v] = 1;
    for (int v = 0; v < g.order(); ++v) {
      if (!near[v]) CHECK(before[v] == after[v]);
    }
  }
}

TEST_CASE("empirical tail stays under the binomial bound") {
  // Center of a once-subdivided 6-star: each neighbor of the center has
  // its own private leaf, so the mod sums around the center behave like
  // Bin(6, 1/k) for any fixed residue.
  Graph spider = testutil::spider_graph(6);
  const long long k = 20;
  const int d = 6;
  const int threshold = d / 2 + 1;
  const int trials = 100000;
  int hits = 0;
  for (int seed = 0; seed < trials; ++seed) {
    Coloring c = sample_coloring(spider, k, seed);
    // Count neighbors of the center whose mod-k sum is 0.
    int count = 0;
    for (Vertex v : spider.neighbors(0)) {
      BigInt s = neighbor_sum(spider, c, v);
      if (s % k == 0) ++count;
    }
    if (count >= threshold) ++hits;
  }
  const double bound = std::pow(2 * std::exp(1.0) / k, threshold);
  CHECK(static_cast<double>(hits) / trials <= 2 * bound);
}
