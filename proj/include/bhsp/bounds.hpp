#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace bhsp {

// Leading term of an asymptotic bound plus the part the statement leaves
// unquantified.
struct BoundEstimate {
  double leading = 0;
  std::string note;
};

// Indices (sorted, 0-based) on which the given pairwise-distinct '0'/'1'
// strings stay pairwise distinct; at most k - 1 of them. Strings are added
// one at a time, and a collision adds the lowest index where the two
// colliding strings differ.
std::vector<std::size_t> distinguishing_index_set(const std::vector<std::string>& strings);

// (pi/4) sqrt(2^n / weight) + O(sqrt(weight)), for 1 <= weight <= 2^{n-1}.
BoundEstimate grover_upper_bound(int n, std::uint64_t weight);

// Omega(sqrt(2^n / weight)) for functions without undetectable shifts.
BoundEstimate search_lower_bound(int n, std::uint64_t weight);

}  // namespace bhsp
