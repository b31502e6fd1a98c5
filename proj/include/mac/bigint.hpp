#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mac {

// Colors and neighbor sums are unbounded: the universal coloring assigns
// 2^(n-1) and intermediate greedy states keep such values around.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace mac
