#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mac/bigint.hpp"
#include "mac/graph.hpp"

namespace mac {

// Vertex coloring with positive integer colors of unbounded size.
struct Coloring {
  std::vector<BigInt> values;

  Coloring() = default;
  explicit Coloring(std::vector<BigInt> v) : values(std::move(v)) {}

  static Coloring uniform(int n, const BigInt& color);
  static Coloring from_ints(const std::vector<long long>& v);

  int size() const { return static_cast<int>(values.size()); }
  const BigInt& operator[](int v) const { return values[v]; }
  BigInt& operator[](int v) { return values[v]; }

  BigInt max_color() const;
  bool operator==(const Coloring& other) const = default;
};

// Throws PreconditionError unless c covers exactly V(G) with colors >= 1.
void require_coloring_for(const Graph& g, const Coloring& c);

// Sum of the colors over N(v); 0 for an isolated vertex.
BigInt neighbor_sum(const Graph& g, const Coloring& c, Vertex v);

// All neighbor sums at once (parallel for large graphs).
std::vector<BigInt> neighbor_sums(const Graph& g, const Coloring& c);

// File format: one "vertexIndex color" line per vertex, 0-indexed,
// decimal colors of unbounded size.
Coloring parse_coloring(std::istream& in, int expected_n);
Coloring parse_coloring(const std::string& text, int expected_n);
void serialize_coloring(const Coloring& c, std::ostream& out);
Coloring load_coloring(const std::string& path, int expected_n);
void save_coloring(const Coloring& c, const std::string& path);

}  // namespace mac
