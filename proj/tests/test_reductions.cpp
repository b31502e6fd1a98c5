#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <set>

#include "mac/errors.hpp"
#include "mac/exact.hpp"
#include "mac/lll.hpp"
#include "mac/reductions.hpp"
#include "mac/reference.hpp"
#include "mac/verify.hpp"
#include "test_util.hpp"

using namespace mac;

namespace {

// (x | y | z) & (!x | z | !w) & (x | !y | w), variables x,y,z,w = 1..4.
NaeFormula example_formula() {
  NaeFormula f;
  f.n_vars = 4;
  f.clauses = {{{1, 2, 3}}, {{-1, 3, -4}}, {{1, -2, 4}}};
  return f;
}

NaeFormula random_formula(int n_vars, int m, mac::Rng& rng) {
  NaeFormula f;
  f.n_vars = n_vars;
  while (f.clause_count() < m) {
    std::set<int> lits;
    while (static_cast<int>(lits.size()) < 3) {
      const int var = 1 + static_cast<int>(rng.below(n_vars));
      lits.insert(rng.below(2) ? var : -var);
    }
    auto it = lits.begin();
    std::array<int, 3> clause;
    for (int i = 0; i < 3; ++i) clause[i] = *it++;
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace

TEST_CASE("formula parsing") {
  NaeFormula f = parse_nae_formula(
      "c not-all-equal semantics\np cnf 4 3\n1 2 3 0\n-1 3 -4 0\n1 -2 4 0\n");
  CHECK(f.n_vars == 4);
  CHECK(f.clause_count() == 3);
  CHECK(f.clauses[1] == std::array<int, 3>{-1, 3, -4});

  CHECK_THROWS_AS(parse_nae_formula("p cnf 2 1\n1 2 0\n"), FormatError);
  CHECK_THROWS_AS(parse_nae_formula("p cnf 2 1\n1 1 2 0\n"), FormatError);
  CHECK_THROWS_AS(parse_nae_formula("p cnf 2 1\n1 2 5 0\n"), FormatError);
  CHECK_THROWS_AS(parse_nae_formula("1 2 3 0\n"), FormatError);
}

TEST_CASE("nae_brute") {
  NaeFormula single;
  single.n_vars = 3;
  single.clauses = {{{1, 2, 3}}};
  auto mu = nae_brute(single);
  REQUIRE(mu.has_value());
  CHECK(nae_satisfies(single, *mu));

  auto example = nae_brute(example_formula());
  REQUIRE(example.has_value());
  CHECK(nae_satisfies(example_formula(), *example));

  // x|y|z plus all sign flips of one variable force all-equal patterns:
  // (1,2,3) and its negation are simultaneously required to be
  // not-all-equal, which a single variable cannot dodge here.
  NaeFormula unsat;
  unsat.n_vars = 3;
  unsat.clauses = {{{1, 2, 3}},  {{-1, 2, 3}}, {{1, -2, 3}}, {{1, 2, -3}},
                   {{-1, -2, 3}}, {{-1, 2, -3}}, {{1, -2, -3}},
                   {{-1, -2, -3}}};
  CHECK_FALSE(nae_brute(unsat).has_value());
}

TEST_CASE("gadget vertex counts") {
  auto gadget = nae_to_mac2(example_formula());
  CHECK(gadget.graph.order() == 17 * 4 + 12 * 3);
  CHECK(gadget.graph.order() == 104);

  NaeFormula single;
  single.n_vars = 3;
  single.clauses = {{{1, 2, 3}}};
  CHECK(nae_to_mac2(single).graph.order() == 17 * 3 + 12);

  // Totality: every vertex has exactly one role.
  CHECK(gadget.map.size() == gadget.graph.order());
}

TEST_CASE("witness coloring for the example formula") {
  NaeFormula f = example_formula();
  auto gadget = nae_to_mac2(f);
  const std::vector<bool> mu{true, false, true, false};
  REQUIRE(nae_satisfies(f, mu));
  Coloring c = assignment_to_coloring(f, mu, gadget);
  CHECK(verify(gadget.graph, c).valid());
  CHECK(c.max_color() <= 2);

  // Round trip, up to global complementation of the assignment.
  auto extracted = coloring_to_assignment(f, gadget, c);
  CHECK(nae_satisfies(f, extracted));
  CHECK(extracted == mu);
}

TEST_CASE("witness colorings on random satisfiable formulas") {
  Rng rng(31);
  int done = 0;
  while (done < 60) {
    NaeFormula f = random_formula(2 + rng.below(4), 1 + rng.below(8), rng);
    auto mu = nae_brute(f);
    if (!mu) continue;
    ++done;
    auto gadget = nae_to_mac2(f);
    Coloring c = assignment_to_coloring(f, *mu, gadget);
    CHECK(verify(gadget.graph, c).valid());
    auto extracted = coloring_to_assignment(f, gadget, c);
    CHECK(nae_satisfies(f, extracted));
  }
}

TEST_CASE("a non-satisfying assignment fails at its clause hub") {
  NaeFormula f;
  f.n_vars = 3;
  f.clauses = {{{1, 2, 3}}, {{-1, -2, 3}}};
  auto gadget = nae_to_mac2(f);
  // All three literals of clause 0 true.
  const std::vector<bool> mu{true, true, true};
  REQUIRE_FALSE(nae_satisfies(f, mu));
  Coloring c = assignment_to_coloring(f, mu, gadget);
  auto report = verify(gadget.graph, c);
  CHECK(report.violates_at(gadget.clause_hub[0]));
}

TEST_CASE("complemented variable colorings extract to the complement") {
  NaeFormula f = example_formula();
  auto gadget = nae_to_mac2(f);
  const std::vector<bool> mu{true, false, true, false};
  const std::vector<bool> complement{false, true, false, true};
  Coloring c = assignment_to_coloring(f, complement, gadget);
  CHECK(verify(gadget.graph, c).valid());
  auto extracted = coloring_to_assignment(f, gadget, c);
  CHECK(extracted == complement);
  CHECK(nae_satisfies(f, extracted));
  // NAE truth is closed under complement.
  CHECK(nae_satisfies(f, mu));
}

TEST_CASE("valid perturbations of a witness still extract correctly") {
  NaeFormula f = example_formula();
  auto gadget = nae_to_mac2(f);
  auto mu = nae_brute(f);
  REQUIRE(mu.has_value());
  Coloring c = assignment_to_coloring(f, *mu, gadget);
  Rng rng(606);
  int kept = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Coloring probe = c;
    // Flip a handful of vertices between the two colors.
    const int flips = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < flips; ++i) {
      const int v = static_cast<int>(rng.below(probe.size()));
      probe[v] = probe[v] == 1 ? 2 : 1;
    }
    if (!verify(gadget.graph, probe).valid()) continue;
    ++kept;
    auto extracted = coloring_to_assignment(f, gadget, probe);
    CHECK(nae_satisfies(f, extracted));
  }
  CHECK(kept > 0);  // pendant tips are slack, flips often stay valid
}

TEST_CASE("extraction rejects invalid colorings") {
  NaeFormula f = example_formula();
  auto gadget = nae_to_mac2(f);
  CHECK_THROWS_AS(coloring_to_assignment(
                      f, gadget, Coloring::uniform(gadget.graph.order(), 1)),
                  PreconditionError);
  CHECK_THROWS_AS(coloring_to_assignment(
                      f, gadget, Coloring::uniform(gadget.graph.order(), 3)),
                  PreconditionError);
}

TEST_CASE("triple subdivision") {
  auto sub = subdivide3(testutil::complete_graph(4));
  CHECK(sub.graph.order() == 4 + 3 * 6);
  CHECK(sub.graph.edge_count() == 4 * 6);

  // A single edge becomes the path 0, 2, 3, 4, 1.
  auto single = subdivide3(testutil::complete_graph(2));
  CHECK(single.graph ==
        Graph::from_edges(5, {{0, 2}, {2, 3}, {3, 4}, {4, 1}}));

  CHECK(private_neighbor_check(subdivide3(testutil::petersen_graph()).graph)
            .satisfied);

  // Roles are total and consistent.
  for (int v = 0; v < sub.map.size(); ++v) {
    const auto& role = sub.map.at(v);
    if (v < 4) {
      CHECK(role.role == Role::kOriginal);
    } else {
      CHECK((role.role == Role::kPathEnd || role.role == Role::kPathMid));
      CHECK(role.edge >= 0);
    }
  }
}

TEST_CASE("majority 3-edge-colorings") {
  // Even cycle: alternation fits the cap 1.
  Graph c4 = testutil::cycle_graph(4);
  auto col4 = majority_3_edge_coloring(c4, 1);
  auto check_caps = [](const Graph& g, const std::vector<int>& col) {
    const auto edges = g.edges();
    std::vector<std::array<int, 4>> count(g.order(), {0, 0, 0, 0});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      REQUIRE(col[e] >= 1);
      REQUIRE(col[e] <= 3);
      ++count[edges[e].first][col[e]];
      ++count[edges[e].second][col[e]];
    }
    for (int u = 0; u < g.order(); ++u) {
      for (int t = 1; t <= 3; ++t) {
        CHECK(count[u][t] <= std::max(1, g.degree(u) / 2));
      }
    }
  };
  check_caps(c4, col4);

  Graph k5 = testutil::complete_graph(5);
  check_caps(k5, majority_3_edge_coloring(k5, 2));

  Rng rng(500);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(29));
    Graph g = testutil::random_graph(n, 0.1 + 0.7 * rng.unit(), rng);
    check_caps(g, majority_3_edge_coloring(g, trial));
  }
}

TEST_CASE("nae_brute rejects oversized instances") {
  NaeFormula f;
  f.n_vars = 24;
  f.clauses = {{{1, 2, 3}}};
  CHECK_THROWS_AS(nae_brute(f), TooLargeError);
}

TEST_CASE("an infeasible cap surfaces as a budget error") {
  // Cubic graphs get a cap of 1 per color, i.e. a proper 3-edge-coloring,
  // and the Petersen graph famously has none.
  CHECK_THROWS_AS(
      majority_3_edge_coloring(testutil::petersen_graph(), 3, 20000),
      BudgetExceededError);
}

TEST_CASE("the lift enforces its degree precondition") {
  Graph c5 = testutil::cycle_graph(5);
  auto sub = subdivide3(c5);
  const std::vector<int> c1{1, 2, 3, 1, 2};
  const std::vector<int> c2{1, 2, 1, 2, 3};
  CHECK_THROWS_AS(kcoloring_to_mac(c5, c1, c2, sub), PreconditionError);
}

TEST_CASE("lifting a proper coloring of K5") {
  Graph k5 = testutil::complete_graph(5);
  auto sub = subdivide3(k5);
  const std::vector<int> c1{1, 2, 3, 4, 5};
  auto c2 = majority_3_edge_coloring(k5, 7);
  Coloring lifted = kcoloring_to_mac(k5, c1, c2, sub);
  CHECK(verify(sub.graph, lifted).valid());
  CHECK(lifted.max_color() <= 5);
}

TEST_CASE("an improper vertex coloring is rejected, and by the gadget") {
  Graph k5 = testutil::complete_graph(5);
  auto sub = subdivide3(k5);
  auto c2 = majority_3_edge_coloring(k5, 7);
  const std::vector<int> improper{1, 1, 3, 4, 5};
  CHECK_THROWS_AS(kcoloring_to_mac(k5, improper, c2, sub),
                  PreconditionError);

  // Build the lift by hand anyway: the middle vertex of the repeated
  // edge must catch it.
  Coloring c = Coloring::uniform(sub.graph.order(), 1);
  for (int v = 0; v < sub.map.size(); ++v) {
    const auto& role = sub.map.at(v);
    if (role.role == Role::kOriginal) c[v] = improper[role.endpoint];
    if (role.role == Role::kPathMid) c[v] = c2[role.edge];
  }
  auto report = verify(sub.graph, c);
  REQUIRE_FALSE(report.valid());
  // Edge 0 of K5 is (0,1), the repeated pair; its path middle fails.
  const Vertex mid01 = 5 + 1;
  CHECK(report.violates_at(mid01));
}

TEST_CASE("valid colorings of the subdivision restrict to proper colorings") {
  Graph k5 = testutil::complete_graph(5);
  auto sub = subdivide3(k5);
  auto outcome = decide_kmac(sub.graph, 5);
  REQUIRE(outcome.verdict == Verdict::kYes);
  const Coloring& c = *outcome.coloring;
  for (const auto& [u, v] : k5.edges()) {
    CHECK(c[u] != c[v]);
  }
  // K5 is not 4-colorable, so the subdivision needs more than 4 colors.
  CHECK(decide_kmac(sub.graph, 4).verdict == Verdict::kNo);
}

TEST_CASE("provenance map serializes to json") {
  auto sub = subdivide3(testutil::complete_graph(2));
  const std::string text = provenance_to_json(sub.map);
  CHECK(text.find("\"original\"") != std::string::npos);
  CHECK(text.find("\"path_mid\"") != std::string::npos);
}
