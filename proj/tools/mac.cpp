// Command-line front end: verification, goodness, greedy and sampled
// colorings, exact decision, generators, and the hardness reductions.

#include <omp.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "mac/errors.hpp"
#include "mac/exact.hpp"
#include "mac/generators.hpp"
#include "mac/goodness.hpp"
#include "mac/greedy.hpp"
#include "mac/lll.hpp"
#include "mac/reductions.hpp"
#include "mac/rng.hpp"
#include "mac/verify.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success or positive verdict, 1 negative verdict,
// 2 usage or input error, 3 budget exhausted / unknown.
constexpr int kExitPositive = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("MAC_LOG");
    if (env == nullptr) return 0;
    const std::string value(env);
    if (value == "debug") return 2;
    if (value == "info") return 1;
    return 0;
  }();
  return level;
}

void log_info(const std::string& message) {
  if (log_level() >= 1) std::cerr << "[mac] " << message << '\n';
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ull;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  std::ostringstream ss;
  ss << std::hex << value;
  return ss.str();
}

json file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mac::FormatError("cannot open input file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string bytes = buffer.str();
  return json{{"path", path},
              {"bytes", bytes.size()},
              {"fnv1a64", hex64(fnv1a64(bytes))}};
}

struct Report {
  json body;
  bool wanted = false;

  void input(const std::string& slot, const std::string& path) {
    body["inputs"][slot] = file_digest(path);
  }
  void emit_if_wanted() const {
    if (wanted) std::cout << body.dump(2) << '\n';
  }
};

json violations_to_json(const mac::ViolationReport& report, std::size_t cap) {
  json out = json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < cap; ++i) {
    const auto& v = report.violations[i];
    out.push_back({{"vertex", v.u},
                   {"sum", v.sum.str()},
                   {"witnesses", v.witnesses}});
  }
  return out;
}

void print_violations(const mac::ViolationReport& report) {
  const std::size_t cap = 20;
  for (std::size_t i = 0; i < report.violations.size() && i < cap; ++i) {
    const auto& v = report.violations[i];
    std::cout << "violation at vertex " << v.u << ": sum " << v.sum
              << " shared by";
    for (mac::Vertex w : v.witnesses) std::cout << ' ' << w;
    std::cout << '\n';
  }
  if (report.violations.size() > cap) {
    std::cout << "... and " << (report.violations.size() - cap) << " more\n";
  }
}

void write_coloring_if(const std::string& path, const mac::Coloring& c) {
  if (path.empty()) return;
  mac::save_coloring(c, path);
  log_info("wrote coloring to " + path);
}

void write_graph_or_stdout(const mac::Graph& g, const std::string& path) {
  if (path.empty()) {
    mac::serialize_graph(g, std::cout, mac::GraphFormat::kDimacs);
  } else {
    mac::save_graph(g, path);
    log_info("wrote graph to " + path);
  }
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majority additive coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Report report;
  bool json_output = false;
  int jobs = 0;
  app.add_flag("--json", json_output, "emit a JSON report on stdout");
  app.add_option("--jobs", jobs, "worker threads for parallel phases");

  std::string graph_path, coloring_path, formula_path, out_path, map_path;
  std::uint64_t seed = 0;
  long long k_option = 0;
  long long budget = 100'000'000;
  long long max_resamples = 1'000'000;
  std::string order = "index";
  int gen_n = 0;
  double gen_p = 0.5;

  auto* check = app.add_subcommand("check", "verify a coloring");
  check->add_option("-g,--graph", graph_path)->required();
  check->add_option("-c,--coloring", coloring_path)->required();

  auto* good = app.add_subcommand("good", "test the blocking condition");
  good->add_option("-g,--graph", graph_path)->required();

  auto* onemac = app.add_subcommand("onemac", "does the all-ones coloring work");
  onemac->add_option("-g,--graph", graph_path)->required();

  auto* greedy = app.add_subcommand("greedy", "greedy recoloring");
  greedy->add_option("-g,--graph", graph_path)->required();
  greedy->add_option("-o,--out", out_path);
  greedy->add_option("--order", order)
      ->check(CLI::IsMember({"index", "random"}));
  greedy->add_option("--seed", seed);

  auto* lll = app.add_subcommand("lll", "sampled coloring with resampling");
  lll->add_option("-g,--graph", graph_path)->required();
  lll->add_option("--seed", seed);
  lll->add_option("--max-resamples", max_resamples);
  lll->add_option("-k,--k", k_option, "override the color budget")
      ->check(CLI::PositiveNumber);
  lll->add_option("-o,--out", out_path);

  auto* exact = app.add_subcommand("exact", "decide a fixed color count");
  exact->add_option("-g,--graph", graph_path)->required();
  exact->add_option("-k,--k", k_option)
      ->required()
      ->check(CLI::PositiveNumber);
  exact->add_option("--budget", budget);
  exact->add_option("-o,--out", out_path);

  auto* chi = app.add_subcommand("chi", "exact chromatic value");
  chi->add_option("-g,--graph", graph_path)->required();
  chi->add_option("--budget", budget);

  auto* gen = app.add_subcommand("gen", "graph generators");
  gen->require_subcommand(1);
  auto* gen_sts_cmd = gen->add_subcommand("sts", "triple-system expansion");
  gen_sts_cmd->add_option("--n", gen_n)->required();
  gen_sts_cmd->add_option("-o,--out", out_path);
  auto* gen_random = gen->add_subcommand("random", "random good graph");
  gen_random->add_option("--n", gen_n)->required();
  gen_random->add_option("--p", gen_p)->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", seed);
  gen_random->add_option("-o,--out", out_path);

  auto* reduce = app.add_subcommand("reduce", "hardness constructions");
  reduce->require_subcommand(1);
  auto* reduce_nae = reduce->add_subcommand("nae3sat", "formula to graph");
  reduce_nae->add_option("-f,--formula", formula_path)->required();
  reduce_nae->add_option("-o,--out", out_path);
  reduce_nae->add_option("--map", map_path);
  auto* reduce_sub = reduce->add_subcommand("subdivide", "triple subdivision");
  reduce_sub->add_option("-g,--graph", graph_path)->required();
  reduce_sub->add_option("-o,--out", out_path);
  reduce_sub->add_option("--map", map_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  report.wanted = json_output;
  report.body["command"] = app.get_subcommands().front()->get_name();
  {
    json args = json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    report.body["argv"] = args;
  }
  if (jobs > 0) {
    omp_set_num_threads(jobs);
    log_info("using " + std::to_string(jobs) + " worker threads");
  }

  Timer timer;
  int exit_code = kExitPositive;
  try {
    if (*check) {
      report.input("graph", graph_path);
      report.input("coloring", coloring_path);
      mac::Graph g = mac::load_graph(graph_path);
      mac::Coloring c = mac::load_coloring(coloring_path, g.order());
      auto result = mac::verify(g, c);
      report.body["outcome"] = {{"valid", result.valid()},
                                {"violation_count", result.violations.size()}};
      report.body["violations"] = violations_to_json(result, 100);
      if (!json_output) {
        std::cout << (result.valid() ? "valid" : "invalid") << '\n';
        print_violations(result);
      }
      exit_code = result.valid() ? kExitPositive : kExitNegative;
    } else if (*good) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      auto witness = mac::is_good(g);
      report.body["outcome"]["good"] = witness.good;
      if (!witness.good) {
        report.body["outcome"]["vertex"] = witness.u;
        report.body["outcome"]["group"] = witness.group;
      }
      if (!json_output) {
        if (witness.good) {
          std::cout << "good\n";
        } else {
          std::cout << "bad: vertex " << witness.u
                    << " has an equal-neighborhood majority of size "
                    << witness.group.size() << '\n';
        }
      }
      exit_code = witness.good ? kExitPositive : kExitNegative;
    } else if (*onemac) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      const bool ok = mac::one_mac_check(g);
      report.body["outcome"]["one_mac"] = ok;
      if (!json_output) std::cout << (ok ? "true" : "false") << '\n';
      exit_code = ok ? kExitPositive : kExitNegative;
    } else if (*greedy) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      mac::GreedyOptions options;
      if (order == "random") {
        std::vector<mac::Vertex> permutation(g.order());
        for (int v = 0; v < g.order(); ++v) permutation[v] = v;
        mac::Rng rng(seed);
        rng.shuffle(permutation);
        options.order = std::move(permutation);
      }
      mac::Coloring c = mac::greedy_recolor(g, options);
      const long long bound = mac::greedy_color_bound(g);
      report.body["outcome"] = {{"max_color", c.max_color().str()},
                                {"bound", bound}};
      if (!json_output) {
        std::cout << "max color " << c.max_color() << " (bound "
                  << bound << ")\n";
      }
      write_coloring_if(out_path, c);
    } else if (*lll) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      mac::LllOptions options;
      options.seed = seed;
      options.max_resamples = max_resamples;
      if (k_option > 0) options.k_override = k_option;
      auto result = mac::lll_color(g, options);
      report.body["outcome"] = {{"k", result.k},
                                {"resamples", result.resamples},
                                {"max_color", result.coloring.max_color().str()}};
      if (!json_output) {
        std::cout << "k " << result.k << ", resamples " << result.resamples
                  << ", max color " << result.coloring.max_color() << '\n';
      }
      write_coloring_if(out_path, result.coloring);
    } else if (*exact) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      mac::SearchOptions options;
      options.budget = budget;
      options.jobs = std::max(1, jobs);
      auto outcome = mac::decide_kmac(g, k_option, options);
      const char* verdict = outcome.verdict == mac::Verdict::kYes   ? "yes"
                            : outcome.verdict == mac::Verdict::kNo ? "no"
                                                                   : "unknown";
      report.body["outcome"] = {{"verdict", verdict},
                                {"nodes", outcome.nodes},
                                {"budget_hit", outcome.budget_hit}};
      if (!json_output) {
        std::cout << verdict << " (nodes " << outcome.nodes << ")\n";
      }
      if (outcome.coloring) write_coloring_if(out_path, *outcome.coloring);
      exit_code = outcome.verdict == mac::Verdict::kYes ? kExitPositive
                  : outcome.verdict == mac::Verdict::kNo ? kExitNegative
                                                         : kExitBudget;
    } else if (*chi) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      mac::SearchOptions options;
      options.budget = budget;
      options.jobs = std::max(1, jobs);
      auto result = mac::chi_mac(g, options);
      switch (result.status) {
        case mac::ChiResult::Status::kValue:
          report.body["outcome"] = {{"chi", result.value},
                                    {"nodes", result.nodes}};
          if (!json_output) std::cout << result.value << '\n';
          break;
        case mac::ChiResult::Status::kNotGood:
          report.body["outcome"]["chi"] = "not-good";
          if (!json_output) std::cout << "NOT-GOOD\n";
          exit_code = kExitNegative;
          break;
        case mac::ChiResult::Status::kUnknown:
          report.body["outcome"]["chi"] = "unknown";
          if (!json_output) std::cout << "UNKNOWN\n";
          exit_code = kExitBudget;
          break;
      }
    } else if (*gen_sts_cmd) {
      auto ts = mac::gen_sts(gen_n);
      mac::Graph g = mac::expand_sts(ts);
      report.body["outcome"] = {{"points", ts.points},
                                {"blocks", ts.blocks.size()},
                                {"vertices", g.order()},
                                {"edges", g.edge_count()},
                                {"max_degree", g.max_degree()}};
      write_graph_or_stdout(g, out_path);
      if (!json_output && !out_path.empty()) {
        std::cout << "expansion on " << g.order() << " vertices, max degree "
                  << g.max_degree() << '\n';
      }
    } else if (*gen_random) {
      mac::Graph g = mac::random_good_graph(gen_n, gen_p, seed);
      report.body["outcome"] = {{"vertices", g.order()},
                                {"edges", g.edge_count()}};
      write_graph_or_stdout(g, out_path);
    } else if (*reduce_nae) {
      report.input("formula", formula_path);
      std::ifstream in(formula_path);
      if (!in) throw mac::FormatError("cannot open formula: " + formula_path);
      mac::NaeFormula f = mac::parse_nae_formula(in);
      auto gadget = mac::nae_to_mac2(f);
      report.body["outcome"] = {{"variables", f.n_vars},
                                {"clauses", f.clause_count()},
                                {"vertices", gadget.graph.order()},
                                {"edges", gadget.graph.edge_count()}};
      write_graph_or_stdout(gadget.graph, out_path);
      if (!map_path.empty()) mac::save_provenance(gadget.map, map_path);
    } else if (*reduce_sub) {
      report.input("graph", graph_path);
      mac::Graph g = mac::load_graph(graph_path);
      auto gadget = mac::subdivide3(g);
      report.body["outcome"] = {{"vertices", gadget.graph.order()},
                                {"edges", gadget.graph.edge_count()}};
      write_graph_or_stdout(gadget.graph, out_path);
      if (!map_path.empty()) mac::save_provenance(gadget.map, map_path);
    }
  } catch (const mac::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.body["error"] = e.what();
    exit_code = kExitBudget;
  } catch (const mac::RetriesExhaustedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.body["error"] = e.what();
    exit_code = kExitBudget;
  } catch (const mac::NotGoodError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.body["error"] = e.what();
    exit_code = kExitNegative;
  } catch (const mac::PncViolatedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.body["error"] = e.what();
    exit_code = kExitNegative;
  } catch (const mac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    report.body["error"] = e.what();
    exit_code = kExitUsage;
  }

  report.body["stats"]["wall_ms"] = timer.ms();
  report.emit_if_wanted();
  return exit_code;
}
