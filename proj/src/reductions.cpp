#include "mac/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <map>
#include <sstream>

#include "mac/errors.hpp"
#include "mac/rng.hpp"
#include "mac/verify.hpp"

namespace mac {

namespace {

void require_valid_formula(const NaeFormula& f) {
  if (f.n_vars < 0) throw FormatError("negative variable count");
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > f.n_vars) {
        throw FormatError("literal out of range: " + std::to_string(lit));
      }
    }
    if (clause[0] == clause[1] || clause[0] == clause[2] ||
        clause[1] == clause[2]) {
      throw FormatError("clause with a repeated literal");
    }
  }
}

}  // namespace

NaeFormula parse_nae_formula(std::istream& in) {
  NaeFormula f;
  bool have_header = false;
  long long declared_m = 0;
  std::string line;
  std::vector<int> pending;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head == "c") continue;
    if (head == "p") {
      std::string kind;
      long long n = -1, m = -1;
      ss >> kind >> n >> m;
      if (ss.fail() || kind != "cnf" || n < 0 || m < 0) {
        throw FormatError("malformed CNF header at line " +
                          std::to_string(lineno));
      }
      f.n_vars = static_cast<int>(n);
      declared_m = m;
      have_header = true;
      continue;
    }
    if (!have_header) throw FormatError("clause before CNF header");
    ss.clear();
    ss.seekg(0);
    int lit = 0;
    bool read_any = false;
    while (ss >> lit) {
      read_any = true;
      if (lit == 0) {
        if (pending.size() != 3) {
          throw FormatError("clause at line " + std::to_string(lineno) +
                            " does not have exactly 3 literals");
        }
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
    if (!read_any) {
      throw FormatError("unrecognized CNF line " + std::to_string(lineno) +
                        ": " + line);
    }
  }
  if (!have_header) throw FormatError("missing CNF header");
  if (!pending.empty()) throw FormatError("unterminated clause");
  if (declared_m != static_cast<long long>(f.clauses.size())) {
    throw FormatError("clause count does not match header");
  }
  require_valid_formula(f);
  return f;
}

NaeFormula parse_nae_formula(const std::string& text) {
  std::istringstream ss(text);
  return parse_nae_formula(ss);
}

bool literal_true(int literal, const std::vector<bool>& mu) {
  const bool value = mu[std::abs(literal) - 1];
  return literal > 0 ? value : !value;
}

bool nae_satisfies(const NaeFormula& f, const std::vector<bool>& mu) {
  for (const auto& clause : f.clauses) {
    int trues = 0;
    for (int lit : clause) trues += literal_true(lit, mu);
    if (trues == 0 || trues == 3) return false;
  }
  return true;
}

std::optional<std::vector<bool>> nae_brute(const NaeFormula& f) {
  require_valid_formula(f);
  if (f.n_vars > 23) {
    throw TooLargeError("nae_brute limited to 2^n <= 1e7 assignments");
  }
  const std::uint64_t total = 1ULL << f.n_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<bool> mu(f.n_vars);
    for (int i = 0; i < f.n_vars; ++i) mu[i] = (mask >> i) & 1;
    if (nae_satisfies(f, mu)) return mu;
  }
  return std::nullopt;
}

std::string role_name(Role role) {
  switch (role) {
    case Role::kLiteralHub: return "literal_hub";
    case Role::kLiteralArm: return "literal_arm";
    case Role::kVariableMid: return "variable_mid";
    case Role::kPendantBase: return "pendant_base";
    case Role::kPendantTip: return "pendant_tip";
    case Role::kClauseHub: return "clause_hub";
    case Role::kClauseArm: return "clause_arm";
    case Role::kClauseTip: return "clause_tip";
    case Role::kOccurrence: return "occurrence";
    case Role::kOriginal: return "original";
    case Role::kPathEnd: return "path_end";
    case Role::kPathMid: return "path_mid";
  }
  return "unknown";
}

std::string provenance_to_json(const ProvenanceMap& map) {
  nlohmann::json out = nlohmann::json::array();
  for (int v = 0; v < map.size(); ++v) {
    const VertexRole& r = map.at(v);
    nlohmann::json entry{{"vertex", v}, {"role", role_name(r.role)}};
    if (r.var >= 0) {
      entry["var"] = r.var;
      entry["negated"] = r.negated;
    }
    if (r.clause >= 0) entry["clause"] = r.clause;
    if (r.pendant >= 0) entry["pendant"] = r.pendant;
    if (r.edge >= 0) entry["edge"] = r.edge;
    if (r.endpoint >= 0) entry["endpoint"] = r.endpoint;
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

void save_provenance(const ProvenanceMap& map, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write map file: " + path);
  out << provenance_to_json(map) << '\n';
}

GadgetGraph nae_to_mac2(const NaeFormula& f) {
  require_valid_formula(f);
  const int n = f.n_vars;
  const int m = f.clause_count();

  // Occurrences per literal, in clause order.
  std::vector<int> occurrences(2 * n, 0);
  auto literal_slot = [](int lit) {
    return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0);
  };
  for (const auto& clause : f.clauses) {
    for (int lit : clause) ++occurrences[literal_slot(lit)];
  }

  GadgetGraph gadget;
  gadget.literal_hub.assign(2 * n, -1);
  gadget.clause_hub.assign(m, -1);
  std::vector<std::pair<int, int>> edges;
  auto& roles = gadget.map.roles;

  auto add_vertex = [&roles](VertexRole role) {
    roles.push_back(role);
    return static_cast<int>(roles.size()) - 1;
  };

  for (int x = 0; x < n; ++x) {
    // Variable path: hub(x), arm(x), mid, arm(!x), hub(!x).
    const int hub_pos = add_vertex({Role::kLiteralHub, x, false});
    const int arm_pos = add_vertex({Role::kLiteralArm, x, false});
    const int mid = add_vertex({Role::kVariableMid, x, false});
    const int arm_neg = add_vertex({Role::kLiteralArm, x, true});
    const int hub_neg = add_vertex({Role::kLiteralHub, x, true});
    gadget.literal_hub[2 * x] = hub_pos;
    gadget.literal_hub[2 * x + 1] = hub_neg;
    edges.emplace_back(hub_pos, arm_pos);
    edges.emplace_back(arm_pos, mid);
    edges.emplace_back(mid, arm_neg);
    edges.emplace_back(arm_neg, hub_neg);

    // Pendant pairs keep the literal hubs balanced: d_l + 3 of them.
    for (int sign = 0; sign < 2; ++sign) {
      const bool negated = sign == 1;
      const int hub = negated ? hub_neg : hub_pos;
      const int pairs = occurrences[2 * x + sign] + 3;
      for (int i = 1; i <= pairs; ++i) {
        VertexRole base{Role::kPendantBase, x, negated};
        base.pendant = i;
        VertexRole tip{Role::kPendantTip, x, negated};
        tip.pendant = i;
        const int base_pos = add_vertex(base);
        const int tip_pos = add_vertex(tip);
        edges.emplace_back(base_pos, tip_pos);
        edges.emplace_back(base_pos, hub);
      }
    }
  }

  for (int c = 0; c < m; ++c) {
    VertexRole hub_role{Role::kClauseHub};
    hub_role.clause = c;
    VertexRole arm_role{Role::kClauseArm};
    arm_role.clause = c;
    VertexRole tip_role{Role::kClauseTip};
    tip_role.clause = c;
    const int hub = add_vertex(hub_role);
    const int arm = add_vertex(arm_role);
    const int tip = add_vertex(tip_role);
    gadget.clause_hub[c] = hub;
    edges.emplace_back(hub, arm);
    edges.emplace_back(arm, tip);

    for (int lit : f.clauses[c]) {
      VertexRole occ{Role::kOccurrence, std::abs(lit) - 1, lit < 0};
      occ.clause = c;
      const int occ_pos = add_vertex(occ);
      edges.emplace_back(gadget.literal_hub[literal_slot(lit)], occ_pos);
      edges.emplace_back(hub, occ_pos);
    }
  }

  gadget.graph = Graph::from_edges(static_cast<int>(roles.size()), edges);
  if (gadget.graph.order() != 17 * n + 12 * m) {
    throw Error("internal: gadget vertex count is off");
  }
  return gadget;
}

Coloring assignment_to_coloring(const NaeFormula& f,
                                const std::vector<bool>& mu,
                                const GadgetGraph& gadget) {
  if (static_cast<int>(mu.size()) != f.n_vars) {
    throw PreconditionError("assignment size does not match variable count");
  }
  Coloring c = Coloring::uniform(gadget.graph.order(), 1);
  for (int v = 0; v < gadget.map.size(); ++v) {
    const VertexRole& r = gadget.map.at(v);
    switch (r.role) {
      case Role::kLiteralHub: {
        const bool value = r.negated ? !mu[r.var] : mu[r.var];
        c[v] = value ? 1 : 2;
        break;
      }
      case Role::kPendantTip:
        c[v] = r.pendant == 1 ? 1 : 2;
        break;
      case Role::kClauseTip: {
        int trues = 0;
        for (int lit : f.clauses[r.clause]) trues += literal_true(lit, mu);
        c[v] = trues == 2 ? 2 : 1;
        break;
      }
      default:
        break;  // hubs of clauses and all degree-2 vertices stay at 1
    }
  }
  return c;
}

std::vector<bool> coloring_to_assignment(const NaeFormula& f,
                                         const GadgetGraph& gadget,
                                         const Coloring& c) {
  require_coloring_for(gadget.graph, c);
  for (const BigInt& x : c.values) {
    if (x > 2) {
      throw PreconditionError("extraction needs a 2-coloring");
    }
  }
  if (!verify(gadget.graph, c).valid()) {
    throw PreconditionError(
        "extraction needs a valid majority additive coloring");
  }
  std::vector<bool> mu(f.n_vars);
  for (int x = 0; x < f.n_vars; ++x) {
    mu[x] = c[gadget.literal_hub[2 * x]] == 1;
  }
  return mu;
}

GadgetGraph subdivide3(const Graph& g) {
  const auto edge_list = g.edges();
  const int n = g.order();

  GadgetGraph out;
  auto& roles = out.map.roles;
  roles.reserve(n + 3 * edge_list.size());
  for (int v = 0; v < n; ++v) {
    VertexRole role{Role::kOriginal};
    role.endpoint = v;
    roles.push_back(role);
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(4 * edge_list.size());
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    const auto [u, v] = edge_list[e];
    const int xu = n + 3 * static_cast<int>(e);
    const int mid = xu + 1;
    const int xv = xu + 2;
    VertexRole end_u{Role::kPathEnd};
    end_u.edge = static_cast<int>(e);
    end_u.endpoint = u;
    VertexRole mid_role{Role::kPathMid};
    mid_role.edge = static_cast<int>(e);
    VertexRole end_v{Role::kPathEnd};
    end_v.edge = static_cast<int>(e);
    end_v.endpoint = v;
    roles.push_back(end_u);
    roles.push_back(mid_role);
    roles.push_back(end_v);
    edges.emplace_back(u, xu);
    edges.emplace_back(xu, mid);
    edges.emplace_back(mid, xv);
    edges.emplace_back(xv, v);
  }
  out.graph =
      Graph::from_edges(n + 3 * static_cast<int>(edge_list.size()), edges);
  return out;
}

namespace {

int saturation_cap(int degree) { return std::max(1, degree / 2); }

}  // namespace

std::vector<int> majority_3_edge_coloring(const Graph& g, std::uint64_t seed,
                                          long long max_iters) {
  const auto edge_list = g.edges();
  const int m = static_cast<int>(edge_list.size());
  const int n = g.order();

  std::vector<std::vector<int>> incident(n);
  for (int e = 0; e < m; ++e) {
    incident[edge_list[e].first].push_back(e);
    incident[edge_list[e].second].push_back(e);
  }

  Rng rng(seed);
  std::vector<int> color(m, 1);
  std::vector<std::array<int, 4>> count(n, {0, 0, 0, 0});

  auto randomize = [&] {
    for (auto& row : count) row = {0, 0, 0, 0};
    for (int e = 0; e < m; ++e) {
      color[e] = 1 + static_cast<int>(rng.below(3));
      ++count[edge_list[e].first][color[e]];
      ++count[edge_list[e].second][color[e]];
    }
  };
  randomize();

  const long long restart_period = 60LL * (m + 1);
  std::vector<std::pair<int, int>> violating;  // (vertex, color)
  for (long long iter = 0; iter < max_iters; ++iter) {
    violating.clear();
    for (int u = 0; u < n; ++u) {
      const int cap = saturation_cap(g.degree(u));
      for (int t = 1; t <= 3; ++t) {
        if (count[u][t] > cap) violating.emplace_back(u, t);
      }
    }
    if (violating.empty()) return color;

    const auto [u, t] = violating[rng.below(violating.size())];
    // Recolor one of u's oversaturated edges, steering toward the color
    // that oversaturates neither endpoint.
    std::vector<int> candidates;
    for (int e : incident[u]) {
      if (color[e] == t) candidates.push_back(e);
    }
    const int e = candidates[rng.below(candidates.size())];
    const int v =
        edge_list[e].first == u ? edge_list[e].second : edge_list[e].first;
    int best = -1;
    int best_score = 1 << 20;
    for (int next = 1; next <= 3; ++next) {
      if (next == t) continue;
      const int score =
          (count[u][next] + 1 > saturation_cap(g.degree(u)) ? 1 : 0) +
          (count[v][next] + 1 > saturation_cap(g.degree(v)) ? 1 : 0);
      if (score < best_score ||
          (score == best_score && rng.below(2) == 0)) {
        best_score = score;
        best = next;
      }
    }
    --count[u][t];
    --count[v][t];
    ++count[u][best];
    ++count[v][best];
    color[e] = best;

    if ((iter + 1) % restart_period == 0) randomize();
  }
  throw BudgetExceededError("majority 3-edge-coloring search ran out of " +
                            std::to_string(max_iters) + " iterations");
}

Coloring kcoloring_to_mac(const Graph& g, const std::vector<int>& c1,
                          const std::vector<int>& c2,
                          const GadgetGraph& subdivided) {
  const int n = g.order();
  const auto edge_list = g.edges();
  if (n > 0 && g.min_degree() < 4) {
    throw PreconditionError("lift requires minimum degree >= 4");
  }
  if (static_cast<int>(c1.size()) != n) {
    throw PreconditionError("vertex coloring size mismatch");
  }
  int k = 0;
  for (int v = 0; v < n; ++v) {
    if (c1[v] < 1) throw PreconditionError("vertex colors must be >= 1");
    k = std::max(k, c1[v]);
  }
  if (k < 3) throw PreconditionError("lift requires k >= 3");
  for (const auto& [u, v] : edge_list) {
    if (c1[u] == c1[v]) {
      throw PreconditionError("vertex coloring is not proper at edge (" +
                              std::to_string(u) + ", " + std::to_string(v) +
                              ")");
    }
  }
  if (c2.size() != edge_list.size()) {
    throw PreconditionError("edge coloring size mismatch");
  }
  std::vector<std::array<int, 4>> count(n, {0, 0, 0, 0});
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    if (c2[e] < 1 || c2[e] > 3) {
      throw PreconditionError("edge colors must lie in [3]");
    }
    ++count[edge_list[e].first][c2[e]];
    ++count[edge_list[e].second][c2[e]];
  }
  for (int u = 0; u < n; ++u) {
    for (int t = 1; t <= 3; ++t) {
      if (2 * count[u][t] > g.degree(u)) {
        throw PreconditionError(
            "edge coloring is not a majority 3-edge-coloring at vertex " +
            std::to_string(u));
      }
    }
  }

  Coloring c = Coloring::uniform(subdivided.graph.order(), 1);
  for (int v = 0; v < subdivided.map.size(); ++v) {
    const VertexRole& r = subdivided.map.at(v);
    if (r.role == Role::kOriginal) {
      c[v] = c1[r.endpoint];
    } else if (r.role == Role::kPathMid) {
      c[v] = c2[r.edge];
    }
  }
  return c;
}

}  // namespace mac
