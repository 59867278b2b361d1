#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bhsp/rng.hpp"

namespace bhsp {

// Points of Z_2^n and shifts are plain integers. Bit j (least significant
// first) of an index holds variable x_{j+1}.
using Point = std::uint32_t;

inline constexpr int kMaxVariables = 24;

// Parity of popcount(a & b).
inline int dot(Point a, Point b) noexcept { return __builtin_parity(a & b); }

// Truth table of f : Z_2^n -> Z_2. Immutable after construction.
class BooleanFunction {
 public:
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return table_.size(); }
  int operator()(Point x) const { return table_[x]; }
  std::span<const std::uint8_t> table() const noexcept { return table_; }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

// (-1)^{f(x)} / sqrt(2^n) with the normalization carried symbolically:
// value(x) = sign(x) * 2^{-half_exponent/2}.
struct SignVector {
  int n = 0;
  int half_exponent = 0;
  std::vector<std::int8_t> signs;

  double value(Point x) const;
};

// `bits` holds 2^n characters '0'/'1' in index order.
BooleanFunction make_function(int n, std::string_view bits);

BooleanFunction shift(const BooleanFunction& f, Point s);
std::uint64_t hamming_weight(const BooleanFunction& f);
BooleanFunction complement(const BooleanFunction& f);

BooleanFunction make_constant(int n, int value);
BooleanFunction make_delta(int n, Point x0);
// First n/2 index bits hold x, the next n/2 hold y; f = sum_i x_i y_i mod 2.
BooleanFunction make_inner_product(int n);
BooleanFunction random_function(int n, std::uint64_t seed);
BooleanFunction random_function(int n, Rng& rng);

SignVector sign_vector(const BooleanFunction& f);

// Text format: "n=<k>\n" followed by one line of 2^k '0'/'1' characters.
std::string format_truth_table(const BooleanFunction& f);
BooleanFunction parse_truth_table(std::string_view text);

void check_point(int n, Point x, const char* what);

}  // namespace bhsp
