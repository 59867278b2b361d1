#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "bhsp/bool_function.hpp"

namespace bhsp {

// b-shifts of f: s with f(x+s) = f(x) + b for all x.
struct ShiftStructure {
  int n = 0;
  // Reduced GF(2) basis of the undetectable (b = 0) shifts, increasing order.
  std::vector<Point> undetectable_basis;
  // Smallest anti-shift (b = 1), if any. All anti-shifts are
  // anti_shift + span(undetectable_basis).
  std::optional<Point> anti_shift;

  std::vector<Point> undetectable_shifts() const;  // full span, sorted
  std::vector<Point> anti_shifts() const;          // full coset, sorted
};

struct ExactOneQueryWitness {
  bool feasible = false;
  mpq_class p_empty;  // k / (2^n + k); meaningful only when feasible
  std::int64_t k = 0;
};

// Reduced basis of span(vectors) over GF(2): one vector per pivot, pivot at
// the vector's lowest set bit and cleared from every other basis vector.
std::vector<Point> gf2_basis(const std::vector<Point>& vectors);
int gf2_rank(const std::vector<Point>& vectors);

ShiftStructure find_b_shifts(const BooleanFunction& f);

bool is_bent(const BooleanFunction& f);

ExactOneQueryWitness exact_one_query_feasible(const BooleanFunction& f);

// Checks both directions of: f has a nonzero b-shift s  <=>  every nonzero
// Fourier coefficient lies in {w : w.s = b}.
bool coset_confinement_check(const BooleanFunction& f);

}  // namespace bhsp
