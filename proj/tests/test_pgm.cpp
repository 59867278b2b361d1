#include <gtest/gtest.h>

#include <cmath>

#include "bhsp/fourier.hpp"
#include "bhsp/pgm.hpp"
#include "bhsp/rng.hpp"
#include "oracles.hpp"

using namespace bhsp;

namespace {

double oracle_success(const BooleanFunction& f, int t) {
  double sum = 0;
  for (const auto& v : oracle::tfold_squared(f, t)) sum += std::sqrt(v.get_d());
  return sum * sum / static_cast<double>(f.size());
}

}  // namespace

TEST(Pgm, OneQueryExactValue) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_function(1 + static_cast<int>(seed % 6), seed);
    long sum = 0;
    for (auto w : oracle::walsh(f)) sum += std::labs(w);
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 2, 3 * static_cast<unsigned long>(f.n()));
    mpq_class expected(mpz_class(sum) * sum, denom);
    expected.canonicalize();
    EXPECT_EQ(success_probability_one_query_exact(f), expected);
    EXPECT_NEAR(success_probability(f, 1), expected.get_d(), 1e-15);
  }
  EXPECT_EQ(success_probability_one_query_exact(make_delta(3, 0)), mpq_class(25, 32));
}

TEST(Pgm, SuccessMatchesRationalOracle) {
  for (int n = 1; n <= 4; ++n) {
    for (int t = 1; t <= 4; ++t) {
      const auto f = random_function(n, 77 * n + t);
      EXPECT_NEAR(success_probability(f, t), oracle_success(f, t), 1e-12) << n << ' ' << t;
    }
  }
}

TEST(Pgm, BentIsPerfectForEveryT) {
  for (int t = 1; t <= 5; ++t) EXPECT_NEAR(success_probability(make_inner_product(6), t), 1.0, 1e-12);
}

TEST(Pgm, ConstantGivesUniformGuess) {
  EXPECT_NEAR(success_probability(make_constant(4, 0), 3), 1.0 / 16, 1e-15);
}

TEST(Pgm, DeltaClosedForm) {
  for (int n = 1; n <= 6; ++n) {
    for (int t = 1; t <= 16; ++t) {
      for (Point x0 : {Point{0}, static_cast<Point>((1u << n) - 1)}) {
        EXPECT_NEAR(success_probability(make_delta(n, x0), t), delta_closed_form(n, t), 1e-10);
      }
    }
  }
  EXPECT_NEAR(delta_closed_form(12, 4096), 1 - std::exp(-4.0), 0.02);
  EXPECT_THROW(delta_closed_form(0, 1), std::invalid_argument);
}

TEST(Pgm, OutcomeDistributionProperties) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng.next() % 6);
    const int t = 1 + static_cast<int>(rng.next() % 3);
    const auto f = random_function(n, rng);
    const Point s = static_cast<Point>(rng.next() % f.size());
    const auto d = outcome_distribution(f, t, s);
    double total = 0;
    for (double p : d.probs) total += p;
    EXPECT_NEAR(total + d.p_inconclusive, 1.0, 1e-12);
    EXPECT_NEAR(d.p_inconclusive, 0.0, 1e-9);
    EXPECT_NEAR(d.probs[s], success_probability(f, t), 1e-12);
    // covariance under relabeling the hidden shift
    const auto d0 = outcome_distribution(f, t, 0);
    for (Point o = 0; o < f.size(); ++o) EXPECT_NEAR(d.probs[o], d0.probs[o ^ s], 1e-12);
  }
}

TEST(Pgm, DeltaHasWrongOutcomes) {
  const auto d = outcome_distribution(make_delta(3, 0), 1, 0);
  EXPECT_GT(d.probs[1], 1e-3);
}

TEST(Pgm, StateVectorMatchesTransformRoute) {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_function(3, rng);
    const Point s = static_cast<Point>(rng.next() % 8);
    for (int t = 1; t <= 3; ++t) {
      const auto a = state_vector_outcome_distribution(f, t, s);
      const auto b = outcome_distribution(f, t, s);
      for (Point o = 0; o < 8; ++o) EXPECT_NEAR(a.probs[o], b.probs[o], 1e-9);
    }
  }
}

TEST(Pgm, PhiStateIsNormalizedWithTFoldBlockNorms) {
  const auto f = random_function(3, 12);
  const auto state = build_phi_state(f, 3, 5);
  double total = 0;
  for (double a : state.amplitudes) total += a * a;
  EXPECT_NEAR(total, 1.0, 1e-12);
  const auto sq = tfold_squared(f, 3);
  for (Point w = 0; w < 8; ++w) {
    double norm = 0;
    for (std::size_t ys = 0; ys < state.block_size(); ++ys) norm += std::pow(state.amplitudes[state.index(ys, w)], 2);
    EXPECT_NEAR(norm, sq[w], 1e-12);
  }
  EXPECT_THROW(build_phi_state(random_function(8, 1), 3, 0), std::invalid_argument);
}

TEST(Pgm, SamplingIsSeededAndUnbiased) {
  const auto f = random_function(4, 2);
  const auto a = sample_measurement(f, 2, 3, 20000, 9);
  const auto b = sample_measurement(f, 2, 3, 20000, 9);
  EXPECT_EQ(a.counts, b.counts);
  const auto d = outcome_distribution(f, 2, 3);
  for (Point o = 0; o < 16; ++o) {
    const double p = d.probs[o];
    const double sd = std::sqrt(20000 * p * (1 - p));
    EXPECT_LE(std::abs(static_cast<double>(a.counts[o]) - 20000 * p), 4 * sd + 1e-9);
  }
  EXPECT_THROW(sample_measurement(f, 1, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(outcome_distribution(f, 0, 0), std::invalid_argument);
  EXPECT_THROW(outcome_distribution(f, 1, 16), std::invalid_argument);
}
