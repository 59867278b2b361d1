#include "bhsp/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"
#include "bhsp/rng.hpp"

namespace bhsp {
namespace {

void check_t(int t) {
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
}

std::vector<double> fourier_values(const BooleanFunction& f) {
  const Spectrum spec = wht(f);
  return {spec.values().begin(), spec.values().end()};
}

// sum_w (-1)^{w.d} F^(t)(w) for every d.
std::vector<double> shifted_sums(const BooleanFunction& f, int t) {
  const Spectrum spec = tfold_spectrum(f, t);
  std::vector<double> h(spec.values().begin(), spec.values().end());
  butterfly(std::span<double>(h));
  return h;
}

OutcomeDistribution finish(int n, std::vector<double> probs) {
  OutcomeDistribution dist;
  dist.n = n;
  for (auto& p : probs) {
    if (p < -1e-12) throw InternalError(fmt::format("negative outcome probability {}", p));
    p = std::max(p, 0.0);
  }
  const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
  double rest = 1.0 - total;
  if (rest < -1e-9) throw InternalError(fmt::format("outcome probabilities sum to {}", total));
  dist.p_inconclusive = std::max(rest, 0.0);
  dist.probs = std::move(probs);
  return dist;
}

}  // namespace

double success_probability(const BooleanFunction& f, int t) {
  check_t(t);
  const double size = static_cast<double>(f.size());
  if (t == 1) {
    const auto w = walsh_coefficients(f);
    std::int64_t total = 0;
    for (auto v : w) total += std::abs(v);
    // (sum |W| / 2^n)^2 / 2^n
    const double mean = static_cast<double>(total) / size;
    return mean * mean / size;
  }
  const Spectrum spec = tfold_spectrum(f, t);
  long double total = 0;
  for (double v : spec.values()) total += v;
  const double p = static_cast<double>(total * total / size);
  return std::min(p, 1.0);
}

mpq_class success_probability_one_query_exact(const BooleanFunction& f) {
  const auto w = walsh_coefficients(f);
  mpz_class total = 0;
  for (auto v : w) total += static_cast<long>(std::abs(v));
  mpz_class denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 2, 3 * static_cast<unsigned long>(f.n()));
  mpq_class p(total * total, denominator);
  p.canonicalize();
  return p;
}

double delta_closed_form(int n, int t) {
  if (n < 1) throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
  check_t(t);
  const double size = std::ldexp(1.0, n);
  const double ratio = std::pow((size - 4.0) / size, t);
  const double a = (size - 1.0) * std::sqrt(std::max(0.0, 1.0 - ratio));
  const double b = std::sqrt(std::max(0.0, 1.0 + (size - 1.0) * ratio));
  return (a + b) * (a + b) / (size * size);
}

OutcomeDistribution outcome_distribution(const BooleanFunction& f, int t, Point s) {
  check_t(t);
  check_point(f.n(), s, "shift");
  const std::vector<double> h = shifted_sums(f, t);
  const double size = static_cast<double>(f.size());
  std::vector<double> probs(f.size());
  for (Point other = 0; other < f.size(); ++other) {
    const double v = h[s ^ other];
    probs[other] = v * v / size;
  }
  return finish(f.n(), std::move(probs));
}

double phi_amplitude(const std::vector<double>& fourier, int n, int t, Point s, std::size_t ys, Point w) {
  const Point mask = static_cast<Point>((std::size_t{1} << n) - 1);
  double amp = dot(s, w) ? -1.0 : 1.0;
  Point folded = 0;
  for (int i = 0; i + 1 < t; ++i) {
    const Point y = static_cast<Point>(ys >> (i * n)) & mask;
    amp *= fourier[y];
    folded ^= y;
  }
  return amp * fourier[w ^ folded];
}

PhiState build_phi_state(const BooleanFunction& f, int t, Point s) {
  check_t(t);
  check_point(f.n(), s, "shift");
  const int n = f.n();
  if (static_cast<long>(n) * t > kMaxStateQubits) {
    throw std::invalid_argument(
        fmt::format("state on n*t = {} qubits exceeds the limit of {}", n * t, kMaxStateQubits));
  }
  const std::size_t size = f.size();

  // One register: H^n |0>, phase (-1)^{f(x+s)}, H^n.
  std::vector<double> single(size, 1.0 / std::sqrt(static_cast<double>(size)));
  for (Point x = 0; x < size; ++x) {
    if (f(x ^ s)) single[x] = -single[x];
  }
  butterfly(std::span<double>(single));
  for (auto& v : single) v /= std::sqrt(static_cast<double>(size));

  PhiState state;
  state.n = n;
  state.t = t;
  const std::size_t total = std::size_t{1} << (n * t);
  state.amplitudes.assign(total, 1.0);
  const std::size_t mask = size - 1;
  for (std::size_t idx = 0; idx < total; ++idx) {
    double amp = 1.0;
    for (int i = 0; i < t; ++i) amp *= single[(idx >> (i * n)) & mask];
    state.amplitudes[idx] = amp;
  }

  // CNOT from bit j of register i onto bit j of the last register.
  for (int i = 0; i + 1 < t; ++i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t control = std::size_t{1} << (i * n + j);
      const std::size_t target = std::size_t{1} << ((t - 1) * n + j);
      for (std::size_t idx = 0; idx < total; ++idx) {
        if ((idx & control) && !(idx & target)) std::swap(state.amplitudes[idx], state.amplitudes[idx | target]);
      }
    }
  }

  const std::vector<double> fourier = fourier_values(f);
  const std::size_t block = state.block_size();
  for (Point w = 0; w < size; ++w) {
    for (std::size_t ys = 0; ys < block; ++ys) {
      const double expected = phi_amplitude(fourier, n, t, s, ys, w);
      if (std::abs(state.amplitudes[state.index(ys, w)] - expected) > 1e-9) {
        throw InternalError("circuit simulation disagrees with the closed-form t-fold state");
      }
    }
  }
  return state;
}

OutcomeDistribution state_vector_outcome_distribution(const BooleanFunction& f, int t, Point s) {
  const PhiState reference = build_phi_state(f, t, 0);
  const PhiState actual = build_phi_state(f, t, s);
  const std::size_t size = f.size();
  const std::size_t block = reference.block_size();

  // overlap(w) = <Phi_w / |Phi_w| | block w of Phi^t(s)>, zero-norm blocks omitted.
  std::vector<double> overlap(size, 0.0);
  for (Point w = 0; w < size; ++w) {
    double norm2 = 0;
    double inner = 0;
    for (std::size_t ys = 0; ys < block; ++ys) {
      const double r = reference.amplitudes[reference.index(ys, w)];
      norm2 += r * r;
      inner += r * actual.amplitudes[actual.index(ys, w)];
    }
    if (norm2 > 1e-18) overlap[w] = inner / std::sqrt(norm2);
  }

  std::vector<double> probs(size);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  for (Point other = 0; other < size; ++other) {
    double amp = 0;
    for (Point w = 0; w < size; ++w) amp += dot(w, other) ? -overlap[w] : overlap[w];
    amp *= scale;
    probs[other] = amp * amp;
  }
  return finish(f.n(), std::move(probs));
}

MeasurementHistogram sample_measurement(const BooleanFunction& f, int t, Point s, std::uint64_t shots,
                                        std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("shots must be >= 1");
  const OutcomeDistribution dist = outcome_distribution(f, t, s);
  std::vector<double> cumulative(dist.probs.size());
  std::partial_sum(dist.probs.begin(), dist.probs.end(), cumulative.begin());

  MeasurementHistogram hist;
  hist.counts.assign(dist.probs.size(), 0);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
      ++hist.inconclusive;
    } else {
      ++hist.counts[static_cast<std::size_t>(it - cumulative.begin())];
    }
  }
  return hist;
}

}  // namespace bhsp
