#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "bhsp/bounds.hpp"
#include "bhsp/rng.hpp"

using namespace bhsp;

namespace {

bool injective_on(const std::vector<std::string>& strings, const std::vector<std::size_t>& idx) {
  std::set<std::string> seen;
  for (const auto& s : strings) {
    std::string r;
    for (auto i : idx) r.push_back(s[i]);
    if (!seen.insert(r).second) return false;
  }
  return true;
}

}  // namespace

TEST(DistinguishingSet, SmallExamples) {
  const auto s = distinguishing_index_set({"00", "01", "11"});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_TRUE(injective_on({"00", "01", "11"}, s));
  EXPECT_EQ(distinguishing_index_set({"0101", "0111"}), (std::vector<std::size_t>{2}));
}

TEST(DistinguishingSet, ExhaustiveSmall) {
  // all 3-subsets of length-3 strings
  std::vector<std::string> all;
  for (int v = 0; v < 8; ++v) all.push_back({char('0' + (v & 1)), char('0' + ((v >> 1) & 1)), char('0' + (v >> 2))});
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      for (int c = b + 1; c < 8; ++c) {
        const std::vector<std::string> strs{all[a], all[b], all[c]};
        const auto s = distinguishing_index_set(strs);
        EXPECT_LE(s.size(), 2u);
        EXPECT_TRUE(injective_on(strs, s));
        EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
      }
    }
  }
}

TEST(DistinguishingSet, RandomLarge) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::set<std::string> unique;
    while (unique.size() < 50) {
      std::string s(64, '0');
      for (auto& ch : s) ch = static_cast<char>('0' + (rng.next() & 1));
      unique.insert(s);
    }
    const std::vector<std::string> strs(unique.begin(), unique.end());
    const auto s = distinguishing_index_set(strs);
    EXPECT_LE(s.size(), 49u);
    EXPECT_TRUE(injective_on(strs, s));
  }
}

TEST(DistinguishingSet, RejectsBadInput) {
  EXPECT_THROW(distinguishing_index_set({"01"}), std::invalid_argument);
  EXPECT_THROW(distinguishing_index_set({"01", "011"}), std::invalid_argument);
  EXPECT_THROW(distinguishing_index_set({"01", "01"}), std::invalid_argument);
  EXPECT_THROW(distinguishing_index_set({"01", "0a"}), std::invalid_argument);
}

TEST(QueryBounds, LeadingTerms) {
  const auto up = grover_upper_bound(10, 4);
  EXPECT_NEAR(up.leading, std::numbers::pi / 4 * 16, 1e-12);
  EXPECT_FALSE(up.note.empty());
  EXPECT_NEAR(search_lower_bound(10, 4).leading, 16.0, 1e-12);
  EXPECT_THROW(grover_upper_bound(4, 0), std::invalid_argument);
  EXPECT_THROW(grover_upper_bound(4, 9), std::invalid_argument);
  EXPECT_NO_THROW(grover_upper_bound(4, 8));
}
