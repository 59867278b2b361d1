#pragma once

// Direct-definition reference implementations, independent of the library's fast paths.

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bhsp/bool_function.hpp"

namespace oracle {

using bhsp::BooleanFunction;
using bhsp::Point;

inline int sign(int bit) { return bit ? -1 : 1; }

inline int parity(Point v) { return __builtin_popcount(v) & 1; }

// 2^n * F^(w), summed term by term.
inline std::vector<std::int64_t> walsh(const BooleanFunction& f) {
  const std::size_t size = f.size();
  std::vector<std::int64_t> out(size);
  for (Point w = 0; w < size; ++w) {
    std::int64_t acc = 0;
    for (Point x = 0; x < size; ++x) acc += sign(f(x) ^ parity(w & x));
    out[w] = acc;
  }
  return out;
}

// 2^n * (F*F)(s).
inline std::vector<std::int64_t> autocorrelation(const BooleanFunction& f) {
  const std::size_t size = f.size();
  std::vector<std::int64_t> out(size);
  for (Point s = 0; s < size; ++s) {
    std::int64_t acc = 0;
    for (Point y = 0; y < size; ++y) acc += sign(f(y) ^ f(y ^ s));
    out[s] = acc;
  }
  return out;
}

// (a*b)(x) = sum_y a(y) b(x+y)
inline std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t size = a.size();
  std::vector<double> out(size, 0.0);
  for (std::size_t x = 0; x < size; ++x) {
    double acc = 0;
    for (std::size_t y = 0; y < size; ++y) acc += a[y] * b[x ^ y];
    out[x] = acc;
  }
  return out;
}

// [F^(t)]^2 by repeated direct convolution of F^2 with itself, in exact rationals.
inline std::vector<mpq_class> tfold_squared(const BooleanFunction& f, int t) {
  const auto w = walsh(f);
  const std::size_t size = f.size();
  std::vector<mpq_class> sq(size);
  for (std::size_t i = 0; i < size; ++i) {
    sq[i] = mpq_class(mpz_class(static_cast<long>(w[i] * w[i])), mpz_class(static_cast<unsigned long>(size * size)));
    sq[i].canonicalize();
  }
  std::vector<mpq_class> acc = sq;
  for (int k = 1; k < t; ++k) {
    std::vector<mpq_class> next(size);
    for (std::size_t x = 0; x < size; ++x) {
      mpq_class s = 0;
      for (std::size_t y = 0; y < size; ++y) s += acc[y] * sq[x ^ y];
      next[x] = s;
    }
    acc = std::move(next);
  }
  return acc;
}

// b-shifts straight from the definition f(x+s) = f(x)+b.
inline std::vector<Point> b_shifts(const BooleanFunction& f, int b) {
  std::vector<Point> out;
  for (Point s = 0; s < f.size(); ++s) {
    bool ok = true;
    for (Point x = 0; x < f.size() && ok; ++x) ok = f(x ^ s) == (f(x) ^ b);
    if (ok) out.push_back(s);
  }
  return out;
}

inline std::set<Point> span(const std::vector<Point>& gens) {
  std::set<Point> out{0};
  for (Point g : gens) {
    std::set<Point> more = out;
    for (Point v : out) more.insert(v ^ g);
    out = std::move(more);
  }
  return out;
}

inline int popcount(Point v) { return __builtin_popcount(v); }

}  // namespace oracle
