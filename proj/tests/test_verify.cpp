#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mac/errors.hpp"
#include "mac/reference.hpp"
#include "mac/verify.hpp"
#include "test_util.hpp"

using namespace mac;

namespace {

// Canonical form for comparing the production and reference reports.
std::vector<Violation> canonical(ViolationReport report) {
  for (auto& v : report.violations) {
    std::sort(v.witnesses.begin(), v.witnesses.end());
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return a.u != b.u ? a.u < b.u : a.sum < b.sum;
            });
  return report.violations;
}

}  // namespace

TEST_CASE("neighbor sums") {
  Graph p3 = testutil::path_graph(3);
  Coloring ones = Coloring::uniform(3, 1);
  CHECK(neighbor_sum(p3, ones, 0) == 1);
  CHECK(neighbor_sum(p3, ones, 1) == 2);
  CHECK(neighbor_sum(p3, ones, 2) == 1);

  Graph k4 = testutil::complete_graph(4);
  Coloring c = Coloring::from_ints({1, 2, 3, 4});
  CHECK(neighbor_sum(k4, c, 0) == 9);

  Graph isolated = Graph::from_edges(1, {});
  CHECK(neighbor_sum(isolated, Coloring::uniform(1, 5), 0) == 0);
}

TEST_CASE("verify on the named small cases") {
  // All-ones on a path of three: the center sees two equal sums.
  Graph p3 = testutil::path_graph(3);
  auto report = verify(p3, Coloring::uniform(3, 1));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].u == 1);
  CHECK(report.violations[0].sum == 1);
  CHECK(report.violations[0].witnesses == std::vector<Vertex>{0, 2});

  // K4 with pairwise distinct colors: sums are 10 - c(v), all distinct.
  Graph k4 = testutil::complete_graph(4);
  CHECK(verify(k4, Coloring::from_ints({1, 2, 3, 4})).valid());

  // C5 with (1,1,2,1,2) fails somewhere.
  Graph c5 = testutil::cycle_graph(5);
  CHECK_FALSE(verify(c5, Coloring::from_ints({1, 1, 2, 1, 2})).valid());
}

TEST_CASE("degree <= 1 vertices never appear") {
  // Two pendant vertices on one support: the support itself violates,
  // but no violation is reported at the pendants.
  Graph star = testutil::star_graph(2);
  auto report = verify(star, Coloring::uniform(3, 1));
  for (const auto& v : report.violations) {
    CHECK(star.degree(v.u) >= 2);
  }
  Graph k2 = testutil::complete_graph(2);
  CHECK(verify(k2, Coloring::uniform(2, 7)).valid());
}

TEST_CASE("verify rejects malformed colorings") {
  Graph p3 = testutil::path_graph(3);
  CHECK_THROWS_AS(verify(p3, Coloring::uniform(2, 1)), PreconditionError);
  CHECK_THROWS_AS(verify(p3, Coloring::from_ints({1, 0, 1})),
                  PreconditionError);
}

TEST_CASE("verify matches the reference on random graphs and colorings") {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    Graph g = testutil::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
    Coloring c = testutil::random_coloring(n, 1 + rng.below(5), rng);
    CHECK(canonical(verify(g, c)) == canonical(reference::verify(g, c)));
  }
}

TEST_CASE("verify big-integer path agrees with the word path") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    Graph g = testutil::random_graph(n, 0.5, rng);
    Coloring small = testutil::random_coloring(n, 4, rng);
    // Scaling all colors by one huge factor scales every sum by the
    // same factor, so collision patterns are exactly preserved.
    Coloring big = small;
    for (int v = 0; v < n; ++v) big[v] <<= 80;
    auto report_small = verify(g, small);
    auto report_big = verify(g, big);
    REQUIRE(report_small.violations.size() == report_big.violations.size());
    for (std::size_t i = 0; i < report_small.violations.size(); ++i) {
      CHECK(report_small.violations[i].u == report_big.violations[i].u);
      CHECK(report_small.violations[i].witnesses ==
            report_big.violations[i].witnesses);
      const BigInt scaled = report_small.violations[i].sum << 80;
      CHECK(scaled == report_big.violations[i].sum);
    }
  }
}

TEST_CASE("mod_verify basics") {
  Graph p3 = testutil::path_graph(3);
  auto report = mod_verify(p3, Coloring::uniform(3, 1), 2);
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].u == 1);

  // Colors outside [k] are rejected.
  CHECK_THROWS_AS(mod_verify(p3, Coloring::from_ints({3, 1, 1}), 2),
                  PreconditionError);
}

TEST_CASE("plain violation implies mod violation for every k") {
  Rng rng(77);
  int seen = 0;
  while (seen < 60) {
    const int n = 2 + static_cast<int>(rng.below(7));
    Graph g = testutil::random_graph(n, 0.5, rng);
    const long long k = 2 + static_cast<long long>(rng.below(4));
    Coloring c = testutil::random_coloring(n, k, rng);
    if (verify(g, c).valid()) continue;
    ++seen;
    CHECK_FALSE(mod_verify(g, c, k).valid());
  }
}

TEST_CASE("mod_verify empty implies verify empty") {
  Rng rng(78);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    Graph g = testutil::random_graph(n, 0.2 + 0.6 * rng.unit(), rng);
    const long long k = 2 + static_cast<long long>(rng.below(5));
    Coloring c = testutil::random_coloring(n, k, rng);
    if (mod_verify(g, c, k).valid()) {
      CHECK(verify(g, c).valid());
    }
  }
}

TEST_CASE("mod_verify matches the reference") {
  Rng rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(8));
    Graph g = testutil::random_graph(n, 0.5, rng);
    const long long k = 1 + static_cast<long long>(rng.below(6));
    Coloring c = testutil::random_coloring(n, k, rng);
    CHECK(canonical(mod_verify(g, c, k)) ==
          canonical(reference::mod_verify(g, c, k)));
  }
}
