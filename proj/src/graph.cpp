#include "mac/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include "mac/errors.hpp"

namespace mac {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  std::vector<std::pair<int, int>> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw PreconditionError("edge endpoint out of range: (" +
                              std::to_string(u) + ", " + std::to_string(v) +
                              ") with n=" + std::to_string(n));
    }
    if (u == v) {
      throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()),
                 directed.end());

  Graph g;
  g.n_ = n;
  g.offsets_.assign(n + 1, 0);
  g.adjacency_.reserve(directed.size());
  for (const auto& [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.adjacency_.push_back(v);
  }
  for (int v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(adjacency_.size() / 2);
  for (int u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> Graph::ball(Vertex center, int radius) const {
  std::vector<int> dist(n_, -1);
  std::vector<Vertex> out;
  std::deque<Vertex> queue{center};
  dist[center] = 0;
  out.push_back(center);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (Vertex w : neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        out.push_back(w);
        queue.push_back(w);
      }
    }
  }
  return out;
}

std::vector<Vertex> Graph::bfs_order() const {
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> order;
  order.reserve(n_);

  // Visit components in order of their best (degree, -index) root.
  std::vector<Vertex> roots(n_);
  for (int v = 0; v < n_; ++v) roots[v] = v;
  std::stable_sort(roots.begin(), roots.end(), [this](Vertex a, Vertex b) {
    return degree(a) > degree(b);
  });

  std::deque<Vertex> queue;
  for (Vertex root : roots) {
    if (seen[root]) continue;
    seen[root] = 1;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return order;
}

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r\n") == std::string::npos;
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::istringstream ss(line);
    char tag = 0;
    ss >> tag;
    if (tag == 'c') continue;
    if (tag == 'p') {
      std::string kind;
      long long declared_n = -1, declared_m = -1;
      ss >> kind >> declared_n >> declared_m;
      if (ss.fail() || (kind != "edge" && kind != "col" && kind != "edges") ||
          declared_n < 0 || declared_m < 0) {
        throw FormatError("malformed DIMACS header at line " +
                          std::to_string(lineno) + ": " + line);
      }
      if (n >= 0) throw FormatError("duplicate DIMACS header");
      n = static_cast<int>(declared_n);
      continue;
    }
    if (tag == 'e') {
      if (n < 0) throw FormatError("DIMACS edge before header");
      long long u = 0, v = 0;
      ss >> u >> v;
      if (ss.fail()) {
        throw FormatError("malformed DIMACS edge at line " +
                          std::to_string(lineno));
      }
      if (u < 1 || u > n || v < 1 || v > n) {
        throw FormatError("DIMACS edge endpoint out of range at line " +
                          std::to_string(lineno) + ": " + line);
      }
      edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw FormatError("unrecognized DIMACS line " + std::to_string(lineno) +
                      ": " + line);
  }
  if (n < 0) throw FormatError("missing DIMACS header");
  return Graph::from_edges(n, edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::vector<std::pair<int, int>> edges;
  long long declared_n = -1;
  long long max_seen = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    std::istringstream ss(line);
    std::string first;
    ss >> first;
    if (first[0] == '#') {
      // "# n N" declares the vertex count; other comments are ignored.
      std::string word;
      long long value = -1;
      if (first == "#" && ss >> word && word == "n" && ss >> value &&
          value >= 0) {
        declared_n = value;
      }
      continue;
    }
    long long u = -1, v = -1;
    try {
      u = std::stoll(first);
    } catch (const std::exception&) {
      throw FormatError("malformed edge-list line " + std::to_string(lineno) +
                        ": " + line);
    }
    ss >> v;
    if (ss.fail() || u < 0 || v < 0) {
      throw FormatError("malformed edge-list line " + std::to_string(lineno) +
                        ": " + line);
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_seen = std::max({max_seen, u, v});
  }
  long long n = std::max(declared_n, max_seen + 1);
  if (declared_n >= 0 && max_seen >= declared_n) {
    throw FormatError("edge endpoint exceeds declared vertex count");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace

Graph parse_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::kDimacs ? parse_dimacs(in)
                                        : parse_edge_list(in);
}

Graph parse_graph(const std::string& text, GraphFormat format) {
  std::istringstream ss(text);
  return parse_graph(ss, format);
}

void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format) {
  auto edges = g.edges();
  if (format == GraphFormat::kDimacs) {
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) {
      out << "e " << (u + 1) << ' ' << (v + 1) << '\n';
    }
  } else {
    out << "# n " << g.order() << '\n';
    for (const auto& [u, v] : edges) {
      out << u << ' ' << v << '\n';
    }
  }
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  std::ostringstream ss;
  serialize_graph(g, ss, format);
  return ss.str();
}

GraphFormat format_for_path(const std::string& path) {
  auto dot = path.find_last_of('.');
  std::string ext = dot == std::string::npos ? "" : path.substr(dot);
  return (ext == ".col" || ext == ".dimacs") ? GraphFormat::kDimacs
                                             : GraphFormat::kEdgeList;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open graph file: " + path);
  return parse_graph(in, format_for_path(path));
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write graph file: " + path);
  serialize_graph(g, out, format_for_path(path));
}

}  // namespace mac
