#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include <gmpxx.h>

#include "bhsp/bool_function.hpp"
#include "bhsp/rng.hpp"

namespace bhsp {

// Moments of X = [F^(t)(w)]^2 over uniform f and uniform w.
struct MomentReport {
  int n = 0;
  int t = 0;
  mpq_class mean;
  mpq_class second_moment;
  mpq_class variance;
  std::optional<mpq_class> closed_form_variance;  // t = 2 only
};

inline constexpr int kMaxBruteForceVars = 3;

// Exact enumeration over all 2^{2^n} functions. n <= 3, or n = 4 with
// allow_slow.
MomentReport brute_force_moments(int n, int t, bool allow_slow = false);

// 12/2^{3n} - 28/2^{4n} + 16/2^{5n}.
mpq_class variance_closed_form_t2(int n);

// 1 iff the tuple splits into pairs of equal elements.
int pairing_indicator(std::span<const std::uint64_t> tuple);

// Expected |z_1 + ... + z_N| for uniform z in {+1,-1}^N: N C(N, N/2) / 2^N.
mpq_class walk_expectation(std::uint64_t steps);

inline constexpr std::uint64_t kMaxWalkSteps = std::uint64_t{1} << 20;

// L(2^n)^2 / 2^n.
double random1_bound(int n);

// 1 - (3/64) 2^{-n}.
double random2_bound(int n);

// The second-moment chain for the expected two-query success probability at
// deviation k:
//   cantelli          = 2^n (mu - k sigma) (1 + 1/k^2)^{-2}
//   simplified        = (1 - k / 2^{n/2}) (1 + 1/k^2)^{-2}   (sigma = 2^{-3n/2})
//   linearized        = (1 - k / 2^{n/2}) (1 - 2/k^2)
//   additive          = 1 - k / 2^{n/2} - 2/k^2
struct CantelliChain {
  int n = 0;
  double k = 0;
  double mu = 0;
  double sigma_exact = 0;
  double sigma_simplified = 0;
  double cantelli_exact_sigma = 0;
  double simplified = 0;
  double linearized = 0;
  double additive = 0;
};

CantelliChain cantelli_chain(int n, double k);
// k = 2^{n/6}.
CantelliChain cantelli_chain(int n);

struct MonteCarloEstimate {
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t samples = 0;
};

using FunctionSampler = std::function<BooleanFunction(int n, Rng& rng)>;

// Mean of p_f(t) over seeded random functions. Sample i draws from
// Rng::substream(seed, i); the result does not depend on `workers`.
MonteCarloEstimate expected_success_mc(int n, int t, std::uint64_t samples, std::uint64_t seed,
                                       unsigned workers = 0, FunctionSampler sampler = {});

}  // namespace bhsp
