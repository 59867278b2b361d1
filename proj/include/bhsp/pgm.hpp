#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "bhsp/bool_function.hpp"

namespace bhsp {

// Output of the t-query state |Phi^t(s)> = sum_w (-1)^{s.w} |Phi_w^(t)> |w>.
// Register i (0-based) occupies index bits [i*n, (i+1)*n); the last register
// holds w, the others y_1 .. y_{t-1}.
struct PhiState {
  int n = 0;
  int t = 0;
  std::vector<double> amplitudes;

  std::size_t block_size() const noexcept { return std::size_t{1} << (n * (t - 1)); }
  // Index of label (y_1..y_{t-1}, w) where `ys` packs the y registers.
  std::size_t index(std::size_t ys, Point w) const noexcept {
    return ys | (static_cast<std::size_t>(w) << (n * (t - 1)));
  }
};

struct OutcomeDistribution {
  int n = 0;
  std::vector<double> probs;  // probability of reporting shift s'
  double p_inconclusive = 0.0;
};

struct MeasurementHistogram {
  std::vector<std::uint64_t> counts;  // per reported shift
  std::uint64_t inconclusive = 0;
};

inline constexpr int kMaxStateQubits = 22;

// p_f(t) = ( 2^{-n/2} sum_w F^(t)(w) )^2.
double success_probability(const BooleanFunction& f, int t);

// p_f(1) as an exact rational: (sum_w |W(w)|)^2 / 2^{3n}.
mpq_class success_probability_one_query_exact(const BooleanFunction& f);

double delta_closed_form(int n, int t);

// probs(s') = 2^-n ( sum_w (-1)^{w.(s+s')} F^(t)(w) )^2.
OutcomeDistribution outcome_distribution(const BooleanFunction& f, int t, Point s);

// Simulates the parallel-query circuit: per register H^n, phase oracle for
// f_s, H^n; then CNOTs folding y_1 + ... + y_t into the last register.
// The result is checked against the closed-form amplitudes.
PhiState build_phi_state(const BooleanFunction& f, int t, Point s);

// Closed form amplitude (-1)^{s.w} F^(y_1)...F^(y_{t-1}) F^(w + y_1 + ... + y_{t-1}).
double phi_amplitude(const std::vector<double>& fourier, int n, int t, Point s, std::size_t ys,
                     Point w);

// Measurement distribution computed directly on the state vector: builds
// |E_{s'}> from the blocks of |Phi^t(0)> and takes |<E_{s'}|Phi^t(s)>|^2.
OutcomeDistribution state_vector_outcome_distribution(const BooleanFunction& f, int t, Point s);

MeasurementHistogram sample_measurement(const BooleanFunction& f, int t, Point s,
                                        std::uint64_t shots, std::uint64_t seed);

}  // namespace bhsp
