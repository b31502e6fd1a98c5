#pragma once

#include <optional>

#include "mac/coloring.hpp"
#include "mac/graph.hpp"

namespace mac {

enum class Verdict { kYes, kNo, kUnknown };

struct SearchOutcome {
  Verdict verdict = Verdict::kUnknown;
  std::optional<Coloring> coloring;  // witness, only for kYes
  long long nodes = 0;               // assignments explored
  bool budget_hit = false;
};

struct SearchOptions {
  long long budget = 100'000'000;  // search-tree nodes
  int jobs = 1;                    // >1 splits the root color branches
};

// Exact decision of "does G have a majority additive k-coloring" by
// backtracking. Vertices are assigned in BFS order stable-sorted by
// degree (highest first); after each assignment the search prunes any
// branch in which some vertex w already has a guaranteed majority:
// a group of more than d(w)/2 neighbors whose partial sums are equal
// and whose remaining uncolored neighbors are the same set, so their
// final sums cannot diverge. Exhaustion without a witness is "no";
// running out of budget is "unknown".
SearchOutcome decide_kmac(const Graph& g, long long k,
                          const SearchOptions& options = {});

struct ChiResult {
  enum class Status { kValue, kNotGood, kUnknown } status = Status::kUnknown;
  long long value = 0;   // the chromatic value when status == kValue
  long long nodes = 0;   // total over all decision calls
};

// Smallest k admitting a majority additive k-coloring, or kNotGood for
// blocked graphs. k = 1 is decided by the all-ones check; afterwards k
// climbs until the greedy bound 2*Delta*(Delta-1)+1, which always
// admits a coloring.
ChiResult chi_mac(const Graph& g, const SearchOptions& options = {});

// Ground-truth enumeration of all k^n colorings (OpenMP over the index
// space, early exit on a witness). Guarded at k^n <= 10^8; throws
// TooLargeError beyond that.
Verdict brute_force_oracle(const Graph& g, long long k);

}  // namespace mac
