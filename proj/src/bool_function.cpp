#include "bhsp/bool_function.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

#include <fmt/core.h>

#include "bhsp/error.hpp"

namespace bhsp {
namespace {

void check_n(int n) {
  if (n < 1 || n > kMaxVariables) {
    throw std::invalid_argument(fmt::format("n must be in 1..{}, got {}", kMaxVariables, n));
  }
}

}  // namespace

void check_point(int n, Point x, const char* what) {
  if (n < 32 && (x >> n) != 0) {
    throw std::invalid_argument(fmt::format("{} {} out of range for n={}", what, x, n));
  }
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table) : n_(n), table_(std::move(table)) {
  check_n(n);
  const std::size_t expected = std::size_t{1} << n;
  if (table_.size() != expected) {
    throw std::invalid_argument(
        fmt::format("expected {} entries for n={}, got {}", expected, n, table_.size()));
  }
  for (auto& bit : table_) {
    if (bit > 1) throw std::invalid_argument("truth table entries must be 0 or 1");
  }
}

double SignVector::value(Point x) const {
  return signs[x] * std::pow(2.0, -0.5 * half_exponent);
}

BooleanFunction make_function(int n, std::string_view bits) {
  check_n(n);
  std::vector<std::uint8_t> table;
  table.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw ParseError(fmt::format("invalid truth table character '{}'", c), i);
    }
    table.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction shift(const BooleanFunction& f, Point s) {
  check_point(f.n(), s, "shift");
  std::vector<std::uint8_t> table(f.size());
  for (Point x = 0; x < f.size(); ++x) table[x] = static_cast<std::uint8_t>(f(x ^ s));
  return BooleanFunction(f.n(), std::move(table));
}

std::uint64_t hamming_weight(const BooleanFunction& f) {
  std::uint64_t weight = 0;
  for (auto bit : f.table()) weight += bit;
  return weight;
}

BooleanFunction complement(const BooleanFunction& f) {
  std::vector<std::uint8_t> table(f.table().begin(), f.table().end());
  for (auto& bit : table) bit ^= 1;
  return BooleanFunction(f.n(), std::move(table));
}

BooleanFunction make_constant(int n, int value) {
  check_n(n);
  if (value != 0 && value != 1) throw std::invalid_argument("constant must be 0 or 1");
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, static_cast<std::uint8_t>(value)));
}

BooleanFunction make_delta(int n, Point x0) {
  check_n(n);
  check_point(n, x0, "x0");
  std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
  table[x0] = 1;
  return BooleanFunction(n, std::move(table));
}

BooleanFunction make_inner_product(int n) {
  check_n(n);
  if (n % 2 != 0) throw std::invalid_argument(fmt::format("inner product needs even n, got {}", n));
  const int half = n / 2;
  const Point low_mask = (Point{1} << half) - 1;
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (Point x = 0; x < table.size(); ++x) {
    table[x] = static_cast<std::uint8_t>(dot(x & low_mask, x >> half));
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction random_function(int n, Rng& rng) {
  check_n(n);
  // Entry x is bit (x mod 64) of the (x / 64)-th generator output.
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  std::uint64_t word = 0;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (x % 64 == 0) word = rng.next();
    table[x] = static_cast<std::uint8_t>((word >> (x % 64)) & 1);
  }
  return BooleanFunction(n, std::move(table));
}

BooleanFunction random_function(int n, std::uint64_t seed) {
  Rng rng(seed);
  return random_function(n, rng);
}

SignVector sign_vector(const BooleanFunction& f) {
  SignVector v;
  v.n = f.n();
  v.half_exponent = f.n();
  v.signs.resize(f.size());
  for (Point x = 0; x < f.size(); ++x) v.signs[x] = f(x) ? -1 : 1;
  return v;
}

std::string format_truth_table(const BooleanFunction& f) {
  std::string out = fmt::format("n={}\n", f.n());
  out.reserve(out.size() + f.size() + 1);
  for (auto bit : f.table()) out.push_back(static_cast<char>('0' + bit));
  out.push_back('\n');
  return out;
}

BooleanFunction parse_truth_table(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (text.substr(pos, 2) != "n=") throw ParseError("expected header 'n=<k>'", pos);
  pos += 2;
  const std::size_t digits_start = pos;
  int n = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    n = n * 10 + (text[pos] - '0');
    if (n > kMaxVariables) throw ParseError("n too large", digits_start);
    ++pos;
  }
  if (pos == digits_start) throw ParseError("expected integer after 'n='", pos);
  skip_space();
  const std::size_t bits_start = pos;
  while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
  const std::string_view bits = text.substr(bits_start, pos - bits_start);
  skip_space();
  if (pos != text.size()) throw ParseError("unexpected character in truth table", pos);
  return make_function(n, bits);
}

}  // namespace bhsp
