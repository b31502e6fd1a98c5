#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mac {

using Vertex = int;

// Simple undirected graph over vertices 0..n-1, stored CSR-style with
// sorted neighbor lists. Immutable after construction, so it can be
// shared read-only across parallel workers.
class Graph {
 public:
  Graph() = default;

  // Builds from an edge list; duplicate edges collapse, self-loops and
  // out-of-range endpoints throw.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  long long edge_count() const {
    return static_cast<long long>(adjacency_.size()) / 2;
  }

  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }

  int max_degree() const;
  int min_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  // Edges as (u, v) pairs with u < v, lexicographically sorted. The edge
  // index in this list is the canonical edge id used by edge colorings
  // and subdivisions.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Vertices at distance <= radius from center (center included).
  std::vector<Vertex> ball(Vertex center, int radius) const;

  // BFS order covering every component; each component is rooted at its
  // maximum-degree vertex (ties to the smallest index).
  std::vector<Vertex> bfs_order() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
};

enum class GraphFormat { kDimacs, kEdgeList };

// DIMACS .col: "c" comments, "p edge n m" header, "e u v" lines 1-indexed.
// Edge list: "u v" per line 0-indexed, "#" comments; an optional "# n N"
// comment declares the vertex count (emitted by the serializer so that
// trailing isolated vertices round-trip).
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);
void serialize_graph(const Graph& g, std::ostream& out, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

// Reads a graph file, picking the format from the extension
// (.col/.dimacs are DIMACS, anything else is an edge list).
Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);
GraphFormat format_for_path(const std::string& path);

}  // namespace mac
