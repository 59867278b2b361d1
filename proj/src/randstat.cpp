#include "bhsp/randstat.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>
#include <vector>

#include <fmt/core.h>

#include "bhsp/error.hpp"
#include "bhsp/fourier.hpp"
#include "bhsp/pgm.hpp"

namespace bhsp {
namespace {

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

mpz_class pow2(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace

mpq_class variance_closed_form_t2(int n) {
  const auto e = static_cast<unsigned long>(n);
  return mpq_class(ratio(12, pow2(3 * e))) - ratio(28, pow2(4 * e)) + ratio(16, pow2(5 * e));
}

MomentReport brute_force_moments(int n, int t, bool allow_slow) {
  if (n < 1 || n > kMaxBruteForceVars + 1 || (n > kMaxBruteForceVars && !allow_slow)) {
    throw std::invalid_argument(
        fmt::format("brute force needs n <= {} (or n = {} with the slow flag), got {}", kMaxBruteForceVars,
                    kMaxBruteForceVars + 1, n));
  }
  if (t < 1) throw std::invalid_argument(fmt::format("t must be >= 1, got {}", t));
  const std::size_t size = std::size_t{1} << n;
  const std::uint64_t functions = std::uint64_t{1} << size;

  mpz_class sum = 0;
  mpz_class sum_sq = 0;
  std::vector<std::uint8_t> table(size);
  for (std::uint64_t code = 0; code < functions; ++code) {
    for (std::size_t x = 0; x < size; ++x) table[x] = static_cast<std::uint8_t>((code >> x) & 1);
    const auto numerators = tfold_squared_numerators(BooleanFunction(n, table), t);
    if (!numerators) throw std::invalid_argument(fmt::format("t={} too large for exact moments", t));
    for (__int128 v : *numerators) {
      const mpz_class z = to_mpz(v);
      sum += z;
      sum_sq += z * z;
    }
  }

  // X = T / 2^{n(t+1)}, averaged over 2^{2^n} functions and 2^n points.
  const auto e = static_cast<unsigned long>(n) * static_cast<unsigned long>(t + 1);
  const mpz_class trials = mpz_class(static_cast<unsigned long>(functions)) * static_cast<unsigned long>(size);
  MomentReport report;
  report.n = n;
  report.t = t;
  report.mean = ratio(sum, trials * pow2(e));
  report.second_moment = ratio(sum_sq, trials * pow2(2 * e));
  report.variance = report.second_moment - report.mean * report.mean;
  report.variance.canonicalize();
  if (t == 2) report.closed_form_variance = variance_closed_form_t2(n);
  return report;
}

int pairing_indicator(std::span<const std::uint64_t> tuple) {
  if (tuple.size() % 2 != 0) {
    throw std::invalid_argument(fmt::format("pairing needs an even number of elements, got {}", tuple.size()));
  }
  std::vector<std::uint64_t> sorted(tuple.begin(), tuple.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); i += 2) {
    if (sorted[i] != sorted[i + 1]) return 0;
  }
  return 1;
}

mpq_class walk_expectation(std::uint64_t steps) {
  if (steps % 2 != 0) throw std::invalid_argument(fmt::format("walk length must be even, got {}", steps));
  if (steps > kMaxWalkSteps) {
    throw std::invalid_argument(fmt::format("walk length {} exceeds {}", steps, kMaxWalkSteps));
  }
  mpz_class central;
  mpz_bin_uiui(central.get_mpz_t(), static_cast<unsigned long>(steps), static_cast<unsigned long>(steps / 2));
  return ratio(central * static_cast<unsigned long>(steps), pow2(static_cast<unsigned long>(steps)));
}

double random1_bound(int n) {
  if (n < 1 || (std::uint64_t{1} << n) > kMaxWalkSteps) {
    throw std::invalid_argument(fmt::format("n must be in 1..20, got {}", n));
  }
  const mpq_class l = walk_expectation(std::uint64_t{1} << n);
  mpq_class value = l * l / mpq_class(pow2(static_cast<unsigned long>(n)));
  value.canonicalize();
  if (value < mpq_class(1, 2)) throw InternalError("L(2^n)^2 / 2^n fell below 1/2");
  return value.get_d();
}

double random2_bound(int n) {
  if (n < 1) throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
  return 1.0 - 3.0 / 64.0 * std::ldexp(1.0, -n);
}

CantelliChain cantelli_chain(int n, double k) {
  if (n < 1) throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
  if (!(k > 0)) throw std::invalid_argument("deviation k must be positive");
  CantelliChain c;
  c.n = n;
  c.k = k;
  const double size = std::ldexp(1.0, n);
  const double root = std::sqrt(size);
  const double shrink = 1.0 / ((1.0 + 1.0 / (k * k)) * (1.0 + 1.0 / (k * k)));
  c.mu = 1.0 / size;
  c.sigma_exact = std::sqrt(variance_closed_form_t2(n).get_d());
  c.sigma_simplified = std::pow(size, -1.5);
  c.cantelli_exact_sigma = size * (c.mu - k * c.sigma_exact) * shrink;
  c.simplified = (1.0 - k / root) * shrink;
  c.linearized = (1.0 - k / root) * (1.0 - 2.0 / (k * k));
  c.additive = 1.0 - k / root - 2.0 / (k * k);
  if (k <= root) {
    constexpr double slack = 1e-15;
    if (c.simplified + slack < c.linearized || c.linearized + slack < c.additive) {
      throw InternalError("second-moment bound chain is not monotone");
    }
  }
  return c;
}

CantelliChain cantelli_chain(int n) { return cantelli_chain(n, std::exp2(n / 6.0)); }

MonteCarloEstimate expected_success_mc(int n, int t, std::uint64_t samples, std::uint64_t seed,
                                       unsigned workers, FunctionSampler sampler) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (!sampler) sampler = [](int vars, Rng& rng) { return random_function(vars, rng); };
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, samples));

  std::vector<double> values(samples);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](unsigned id) {
    try {
      for (std::uint64_t i = id; i < samples; i += workers) {
        Rng rng = Rng::substream(seed, i);
        values[i] = success_probability(sampler(n, rng), t);
      }
    } catch (...) {
      failures[id] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  // Reduce in index order so the sum is identical for any worker count.
  long double sum = 0;
  for (double v : values) sum += v;
  const long double mean = sum / static_cast<long double>(samples);
  long double sq = 0;
  for (double v : values) sq += (v - mean) * (v - mean);

  MonteCarloEstimate est;
  est.samples = samples;
  est.estimate = static_cast<double>(mean);
  est.stderr_ = samples > 1 ? static_cast<double>(std::sqrt(sq / static_cast<long double>(samples - 1) /
                                                            static_cast<long double>(samples)))
                            : 0.0;
  return est;
}

}  // namespace bhsp
