#include "mac/coloring.hpp"

#include <fstream>
#include <sstream>

#include "mac/errors.hpp"

namespace mac {

Coloring Coloring::uniform(int n, const BigInt& color) {
  Coloring c;
  c.values.assign(n, color);
  return c;
}

Coloring Coloring::from_ints(const std::vector<long long>& v) {
  Coloring c;
  c.values.reserve(v.size());
  for (long long x : v) c.values.emplace_back(x);
  return c;
}

BigInt Coloring::max_color() const {
  BigInt best = 0;
  for (const BigInt& x : values) {
    if (x > best) best = x;
  }
  return best;
}

void require_coloring_for(const Graph& g, const Coloring& c) {
  if (c.size() != g.order()) {
    throw PreconditionError("coloring covers " + std::to_string(c.size()) +
                            " vertices, graph has " +
                            std::to_string(g.order()));
  }
  for (int v = 0; v < c.size(); ++v) {
    if (c[v] < 1) {
      throw PreconditionError("color of vertex " + std::to_string(v) +
                              " is not a positive integer");
    }
  }
}

BigInt neighbor_sum(const Graph& g, const Coloring& c, Vertex v) {
  BigInt acc = 0;
  for (Vertex w : g.neighbors(v)) acc += c[w];
  return acc;
}

std::vector<BigInt> neighbor_sums(const Graph& g, const Coloring& c) {
  const int n = g.order();
  std::vector<BigInt> sums(n);
#pragma omp parallel for schedule(static) if (n > 512)
  for (int v = 0; v < n; ++v) {
    sums[v] = neighbor_sum(g, c, v);
  }
  return sums;
}

Coloring parse_coloring(std::istream& in, int expected_n) {
  std::vector<BigInt> values(expected_n, BigInt(0));
  std::vector<char> seen(expected_n, 0);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    if (head[0] == '#') continue;
    long long v = -1;
    std::string color;
    try {
      v = std::stoll(head);
    } catch (const std::exception&) {
      throw FormatError("malformed coloring line " + std::to_string(lineno) +
                        ": " + line);
    }
    ss >> color;
    if (ss.fail() || v < 0 || v >= expected_n) {
      throw FormatError("malformed coloring line " + std::to_string(lineno) +
                        ": " + line);
    }
    BigInt parsed;
    try {
      parsed = BigInt(color);
    } catch (const std::exception&) {
      throw FormatError("bad color on line " + std::to_string(lineno) + ": " +
                        color);
    }
    if (parsed < 1) {
      throw FormatError("color must be >= 1 on line " + std::to_string(lineno));
    }
    if (seen[v]) {
      throw FormatError("duplicate vertex " + std::to_string(v) +
                        " in coloring");
    }
    seen[v] = 1;
    values[static_cast<int>(v)] = parsed;
  }
  for (int v = 0; v < expected_n; ++v) {
    if (!seen[v]) {
      throw FormatError("coloring is missing vertex " + std::to_string(v));
    }
  }
  return Coloring(std::move(values));
}

Coloring parse_coloring(const std::string& text, int expected_n) {
  std::istringstream ss(text);
  return parse_coloring(ss, expected_n);
}

void serialize_coloring(const Coloring& c, std::ostream& out) {
  for (int v = 0; v < c.size(); ++v) {
    out << v << ' ' << c[v] << '\n';
  }
}

Coloring load_coloring(const std::string& path, int expected_n) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open coloring file: " + path);
  return parse_coloring(in, expected_n);
}

void save_coloring(const Coloring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write coloring file: " + path);
  serialize_coloring(c, out);
}

}  // namespace mac
