#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

// Not-all-equal 3-SAT instance. Literals are DIMACS style: +-(var+1),
// three distinct literals per clause.
struct NaeFormula {
  int n_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  int clause_count() const { return static_cast<int>(clauses.size()); }
};

// DIMACS CNF restricted to 3-literal clauses ("c" comments may declare
// the NAE reading; they are not interpreted).
NaeFormula parse_nae_formula(std::istream& in);
NaeFormula parse_nae_formula(const std::string& text);

bool literal_true(int literal, const std::vector<bool>& mu);
// Every clause has both a true and a false literal under mu.
bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& mu);
// Exhaustive search, guarded at 2^n_vars <= 10^7.
std::optional<std::vector<bool>> nae_brute(const NaeFormula& f);

// What a gadget vertex stands for.
enum class Role {
  kLiteralHub,   // carries a literal's truth value as color 1 or 2
  kLiteralArm,   // path vertex next to a literal hub
  kVariableMid,  // middle of the 5-vertex variable path
  kPendantBase,  // degree-2 base of a pendant pair on a literal hub
  kPendantTip,   // degree-1 tip of a pendant pair
  kClauseHub,    // joined to one occurrence vertex per clause literal
  kClauseArm,    // middle of the 3-vertex clause path
  kClauseTip,    // end of the 3-vertex clause path
  kOccurrence,   // joins a literal hub to a clause hub
  kOriginal,     // subdivision: vertex of the input graph
  kPathEnd,      // subdivision: path vertex attached to an original
  kPathMid,      // subdivision: middle vertex of a subdivided edge
};
std::string role_name(Role role);

struct VertexRole {
  Role role;
  int var = -1;          // variable index, for variable-gadget roles
  bool negated = false;  // which literal of the variable
  int clause = -1;       // clause index, for clause-gadget roles
  int pendant = -1;      // 1-based pendant index for pendant pairs
  int edge = -1;         // edge id, for subdivision roles
  int endpoint = -1;     // original endpoint, for kPathEnd
};

// Total map: exactly one role per gadget vertex.
struct ProvenanceMap {
  std::vector<VertexRole> roles;

  const VertexRole& at(Vertex v) const { return roles[v]; }
  int size() const { return static_cast<int>(roles.size()); }
};

std::string provenance_to_json(const ProvenanceMap& map);
void save_provenance(const ProvenanceMap& map, const std::string& path);

struct GadgetGraph {
  Graph graph;
  ProvenanceMap map;

  // Convenience handles filled by the constructors.
  std::vector<Vertex> literal_hub;  // index 2*var + (negated ? 1 : 0)
  std::vector<Vertex> clause_hub;   // index = clause
};

// The 2-color hardness gadget: a 5-vertex path per variable, d_l + 3
// pendant pairs per literal, a 3-vertex path per clause, and one
// occurrence vertex per (literal, clause) incidence. Vertex count is
// 17 * n_vars + 12 * m.
GadgetGraph nae_to_mac2(const NaeFormula& f);

// The witness 2-coloring for an NAE-satisfying assignment. For a
// non-satisfying mu the coloring is still produced and fails verify at
// a clause hub.
Coloring assignment_to_coloring(const NaeFormula& f,
                                const std::vector<bool>& mu,
                                const GadgetGraph& gadget);

// Extracts an assignment from a valid 2-coloring of the gadget: x is
// true iff the positive literal hub has color 1. Throws
// PreconditionError unless the coloring uses colors {1,2} and verifies.
std::vector<bool> coloring_to_assignment(const NaeFormula& f,
                                         const GadgetGraph& gadget,
                                         const Coloring& c);

// Replaces each edge uv with a path u, x_u, y, x_v, v (three new
// vertices per edge). Originals keep their indices; edge e adds
// n + 3e .. n + 3e + 2.
GadgetGraph subdivide3(const Graph& g);

// Per-edge colors in [3] such that no vertex has more than
// max(1, floor(d/2)) incident edges of one color, found by seeded local
// search with restarts. Edge order matches g.edges(). Throws
// BudgetExceededError if max_iters runs out.
std::vector<int> majority_3_edge_coloring(const Graph& g, std::uint64_t seed,
                                          long long max_iters = 1'000'000);

// Lifts a proper vertex k-coloring (k >= 3) of a graph with minimum
// degree >= 4 and a majority 3-edge-coloring to a majority additive
// k-coloring of the triple subdivision: originals keep c1, each path
// middle takes its edge's c2 color, path ends take 1.
Coloring kcoloring_to_mac(const Graph& g, const std::vector<int>& c1,
                          const std::vector<int>& c2,
                          const GadgetGraph& subdivided);

}  // namespace mac
