#include "bhsp/shifts.hpp"

#include <algorithm>

#include <fmt/core.h>

#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"

namespace bhsp {
namespace {

Point lowest_bit(Point v) { return v & (~v + 1); }

std::vector<Point> span_of(const std::vector<Point>& basis) {
  std::vector<Point> out{0};
  for (Point b : basis) {
    const std::size_t size = out.size();
    for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Point> gf2_basis(const std::vector<Point>& vectors) {
  std::vector<Point> basis;
  for (Point v : vectors) {
    for (Point b : basis) {
      if (v & lowest_bit(b)) v ^= b;
    }
    if (v == 0) continue;
    const Point pivot = lowest_bit(v);
    for (Point& b : basis) {
      if (b & pivot) b ^= v;
    }
    basis.push_back(v);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

int gf2_rank(const std::vector<Point>& vectors) { return static_cast<int>(gf2_basis(vectors).size()); }

std::vector<Point> ShiftStructure::undetectable_shifts() const { return span_of(undetectable_basis); }

std::vector<Point> ShiftStructure::anti_shifts() const {
  if (!anti_shift) return {};
  std::vector<Point> out = span_of(undetectable_basis);
  for (Point& p : out) p ^= *anti_shift;
  std::sort(out.begin(), out.end());
  return out;
}

ShiftStructure find_b_shifts(const BooleanFunction& f) {
  const auto a = autocorrelation_numerators(f);
  const std::int64_t full = static_cast<std::int64_t>(f.size());
  std::vector<Point> zero_shifts;
  ShiftStructure result;
  result.n = f.n();
  for (Point s = 1; s < f.size(); ++s) {
    if (a[s] == full) {
      zero_shifts.push_back(s);
    } else if (a[s] == -full && !result.anti_shift) {
      result.anti_shift = s;
    }
  }
  result.undetectable_basis = gf2_basis(zero_shifts);
  return result;
}

bool is_bent(const BooleanFunction& f) {
  const auto w = walsh_coefficients(f);
  const std::int64_t size = static_cast<std::int64_t>(f.size());
  const bool flat = std::all_of(w.begin(), w.end(), [&](std::int64_t v) { return v * v == size; });

  const auto a = autocorrelation_numerators(f);
  bool delta = a[0] == size;
  for (std::size_t x = 1; x < a.size() && delta; ++x) delta = a[x] == 0;

  if (flat != delta) {
    throw InternalError("flat-spectrum and autocorrelation bentness tests disagree");
  }
  return flat;
}

ExactOneQueryWitness exact_one_query_feasible(const BooleanFunction& f) {
  const auto a = autocorrelation_numerators(f);
  const std::int64_t size = static_cast<std::int64_t>(f.size());
  ExactOneQueryWitness witness;

  // (F*F)(w) must equal the same value -k/2^n at every w != 0.
  const std::int64_t common = a[1];
  const bool constant = std::all_of(a.begin() + 1, a.end(), [&](std::int64_t v) { return v == common; });
  if (constant && common <= 0) {
    const std::int64_t k = -common;
    const std::int64_t balance = size - 2 * static_cast<std::int64_t>(hamming_weight(f));
    if (balance * balance == size - (size - 1) * k) {
      witness.feasible = true;
      witness.k = k;
      witness.p_empty = mpq_class(k, size + k);
      witness.p_empty.canonicalize();
    }
  }

  if (f.n() >= 2) {
    const bool bent = is_bent(f);
    if (witness.feasible != bent || (witness.feasible && witness.k != 0)) {
      throw InternalError(fmt::format("exact one-query characterization disagrees with bentness "
                                      "(feasible={}, k={}, bent={})",
                                      witness.feasible, witness.k, bent));
    }
  }
  return witness;
}

bool coset_confinement_check(const BooleanFunction& f) {
  const auto a = autocorrelation_numerators(f);
  const auto w = walsh_coefficients(f);
  const std::int64_t size = static_cast<std::int64_t>(f.size());

  // indicator(s) = sum_{w in supp} (-1)^{w.s}; it equals +|supp| exactly when
  // the support lies in {w.s = 0} and -|supp| when it lies in {w.s = 1}.
  std::vector<std::int64_t> indicator(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) indicator[i] = w[i] != 0;
  butterfly(std::span<std::int64_t>(indicator));
  const std::int64_t support_size = indicator[0];

  for (Point s = 1; s < f.size(); ++s) {
    for (int b = 0; b < 2; ++b) {
      const bool has_shift = a[s] == (b == 0 ? size : -size);
      const bool confined = indicator[s] == (b == 0 ? support_size : -support_size);
      if (has_shift != confined) return false;
    }
  }
  return true;
}

}  // namespace bhsp
