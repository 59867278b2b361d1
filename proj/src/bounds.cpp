#include "bhsp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include <fmt/core.h>

#include "bhsp/error.hpp"

namespace bhsp {
namespace {

bool agree_on(const std::string& a, const std::string& b, const std::vector<std::size_t>& indices) {
  return std::all_of(indices.begin(), indices.end(), [&](std::size_t i) { return a[i] == b[i]; });
}

std::size_t first_difference(const std::string& a, const std::string& b) {
  return static_cast<std::size_t>(std::mismatch(a.begin(), a.end(), b.begin()).first - a.begin());
}

void check_weight(int n, std::uint64_t weight) {
  if (n < 1 || n > 62) throw std::invalid_argument(fmt::format("n must be in 1..62, got {}", n));
  if (weight < 1 || weight > (std::uint64_t{1} << n)) {
    throw std::invalid_argument(fmt::format("weight must be in 1..2^{}, got {}", n, weight));
  }
}

}  // namespace

std::vector<std::size_t> distinguishing_index_set(const std::vector<std::string>& strings) {
  if (strings.size() < 2) throw std::invalid_argument("need at least two strings");
  const std::size_t length = strings.front().size();
  for (const auto& s : strings) {
    if (s.size() != length) throw std::invalid_argument("strings must have equal length");
    if (s.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument(fmt::format("'{}' is not a bit string", s));
    }
  }
  if (std::set<std::string>(strings.begin(), strings.end()).size() != strings.size()) {
    throw std::invalid_argument("duplicate input strings");
  }

  std::vector<std::size_t> indices{first_difference(strings[0], strings[1])};
  for (std::size_t m = 2; m < strings.size(); ++m) {
    const std::string& next = strings[m];
    // Earlier strings are pairwise distinct on `indices`, so at most one of
    // them can collide with the new string.
    for (std::size_t j = 0; j < m; ++j) {
      if (agree_on(strings[j], next, indices)) {
        indices.push_back(first_difference(strings[j], next));
        break;
      }
    }
  }
  std::sort(indices.begin(), indices.end());
  if (indices.size() + 1 > strings.size()) throw InternalError("distinguishing set exceeds k - 1 indices");
  return indices;
}

BoundEstimate grover_upper_bound(int n, std::uint64_t weight) {
  check_weight(n, weight);
  const std::uint64_t size = std::uint64_t{1} << n;
  if (2 * weight > size) {
    throw std::invalid_argument(fmt::format("weight must be at most 2^{}/2 = {}, got {}", n, size / 2, weight));
  }
  BoundEstimate b;
  b.leading = std::numbers::pi / 4.0 * std::sqrt(static_cast<double>(size) / static_cast<double>(weight));
  b.note = fmt::format("plus O(sqrt(|f|)) = O(sqrt({})) oracle-identification queries; constant unspecified",
                       weight);
  return b;
}

BoundEstimate search_lower_bound(int n, std::uint64_t weight) {
  check_weight(n, weight);
  BoundEstimate b;
  b.leading = std::sqrt(std::ldexp(1.0, n) / static_cast<double>(weight));
  b.note = "Omega(sqrt(2^n/|f|)) for functions without undetectable shifts; constant unspecified";
  return b;
}

}  // namespace bhsp
