#include <gtest/gtest.h>

#include "bhsp/bool_function.hpp"
#include "bhsp/error.hpp"
#include "bhsp/rng.hpp"

using namespace bhsp;

TEST(BooleanFunction, MakeFunctionIndexesByPoint) {
  const auto f = make_function(2, "0111");
  EXPECT_EQ(f.n(), 2);
  EXPECT_EQ(f(0), 0);
  EXPECT_EQ(f(1), 1);
  EXPECT_EQ(f(3), 1);
  EXPECT_EQ(hamming_weight(f), 3u);
}

TEST(BooleanFunction, RejectsWrongLength) {
  EXPECT_THROW(make_function(2, "011"), std::invalid_argument);
  EXPECT_THROW(make_function(1, "0x"), ParseError);
  EXPECT_THROW(BooleanFunction(2, {0, 1, 2, 0}), std::invalid_argument);
  EXPECT_THROW(make_constant(0, 0), std::invalid_argument);
  EXPECT_THROW(make_constant(kMaxVariables + 1, 0), std::invalid_argument);
}

TEST(BooleanFunction, ShiftDefinition) {
  const auto f = random_function(5, 11);
  for (Point s = 0; s < 32; ++s) {
    const auto g = shift(f, s);
    for (Point x = 0; x < 32; ++x) EXPECT_EQ(g(x), f(x ^ s));
  }
  EXPECT_THROW(shift(f, 32), std::invalid_argument);
}

TEST(BooleanFunction, ComplementAndConstant) {
  const auto f = random_function(4, 3);
  const auto g = complement(f);
  EXPECT_EQ(hamming_weight(f) + hamming_weight(g), 16u);
  EXPECT_EQ(complement(g), f);
  EXPECT_EQ(hamming_weight(make_constant(3, 1)), 8u);
  EXPECT_EQ(hamming_weight(make_constant(3, 0)), 0u);
}

TEST(BooleanFunction, DeltaAndInnerProduct) {
  const auto d = make_delta(4, 9);
  EXPECT_EQ(hamming_weight(d), 1u);
  EXPECT_EQ(d(9), 1);
  const auto ip = make_inner_product(4);
  // x = x1 x2, y = x3 x4 ; f = x1 x3 + x2 x4
  for (Point v = 0; v < 16; ++v) {
    const int expected = ((v & 1) & ((v >> 2) & 1)) ^ (((v >> 1) & 1) & ((v >> 3) & 1));
    EXPECT_EQ(ip(v), expected);
  }
  EXPECT_EQ(hamming_weight(ip), 6u);
  EXPECT_THROW(make_inner_product(3), std::invalid_argument);
}

TEST(BooleanFunction, RandomIsDeterministic) {
  EXPECT_EQ(random_function(8, 42), random_function(8, 42));
  EXPECT_NE(random_function(8, 42), random_function(8, 43));
  Rng a(5), b(5);
  EXPECT_EQ(random_function(6, a), random_function(6, b));
}

TEST(BooleanFunction, SignVectorIsNormalized) {
  const auto v = sign_vector(random_function(6, 1));
  double norm = 0;
  for (Point x = 0; x < 64; ++x) norm += v.value(x) * v.value(x);
  EXPECT_NEAR(norm, 1.0, 1e-12);
}

TEST(BooleanFunction, TruthTableRoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto f = random_function(1 + static_cast<int>(seed % 7), seed);
    EXPECT_EQ(parse_truth_table(format_truth_table(f)), f);
  }
  EXPECT_THROW(parse_truth_table("n=2\n01\n"), std::invalid_argument);
  EXPECT_THROW(parse_truth_table("2\n0110\n"), ParseError);
  EXPECT_THROW(parse_truth_table("n=2\n0110 z"), ParseError);
}

TEST(Rng, SubstreamsDiffer) {
  auto a = Rng::substream(1, 0);
  auto b = Rng::substream(1, 1);
  EXPECT_NE(a.next(), b.next());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
