#include <gtest/gtest.h>

#include "flatder/oracle.hpp"
#include "flatder/permutation.hpp"
#include "support/naive.hpp"

namespace flatder {
namespace {

YPoly y_poly(std::initializer_list<int> coeffs) {
  std::vector<BigInt> c;
  for (int v : coeffs) c.emplace_back(v);
  return YPoly(std::move(c));
}

// Sum of y^cycles over derangements from the filter-based enumerator.
YPoly naive_distribution(const VincularPattern& pattern, int n) {
  std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
  for (const auto& w : testing::derangements_by_filter(n)) {
    int cycles = 0;
    const auto flat = testing::naive_flatten(w, &cycles);
    if (!testing::naive_contains(flat, pattern.letters(), pattern.glue())) counts[static_cast<std::size_t>(cycles)] += 1;
  }
  return YPoly(std::move(counts));
}

TEST(OracleDistribution, PublishedValues) {
  EXPECT_EQ(oracle::distribution(parse_pattern("3-12"), 4), y_poly({0, 5, 2}));
  EXPECT_EQ(oracle::distribution(parse_pattern("31-2"), 5).evaluate(BigInt(1)), 23);
  EXPECT_EQ(oracle::distribution(parse_pattern("1-23"), 7), YPoly::y());
}

TEST(OracleDistribution, LengthOneIsZero) {
  EXPECT_TRUE(oracle::distribution(parse_pattern("12-3"), 1).is_zero());
  EXPECT_EQ(oracle::distribution(parse_pattern("12-3"), 2), YPoly::y());
}

TEST(OracleDistribution, AgreesWithFilterEnumeration) {
  for (const auto& name : canonical_pattern_names()) {
    const VincularPattern pattern = parse_pattern(name);
    for (int n = 2; n <= 7; ++n) {
      EXPECT_EQ(oracle::distribution(pattern, n), naive_distribution(pattern, n)) << name << " n=" << n;
    }
  }
}

TEST(OracleDistribution, RejectsOversizedLengths) {
  EXPECT_THROW(oracle::distribution(parse_pattern("12-3"), oracle::kMaxLength + 1), std::invalid_argument);
  EXPECT_THROW(oracle::distribution(parse_pattern("12-3"), 0), std::invalid_argument);
}

TEST(RefinedSecondLetter, BoundaryAndSums) {
  const VincularPattern p = parse_pattern("31-2");
  const RefinedTable t = oracle::refined_second_letter(p, 4);
  EXPECT_EQ(t.at({4, 0}), YPoly::y());
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(oracle::refined_second_letter(p, n).total(), oracle::distribution(p, n)) << n;
  }
  const RefinedTable two = oracle::refined_second_letter(parse_pattern("21-3"), 2);
  ASSERT_EQ(two.entries.size(), 1u);
  EXPECT_EQ(two.at({2, 0}), YPoly::y());
}

TEST(RefinedThirdLetter, PublishedEntry) {
  const RefinedTable t = oracle::refined_third_letter(parse_pattern("12-3"), 5);
  EXPECT_EQ(t.at({3, 0}), y_poly({0, 2, 1}));
  // Keys run over the third letter 2..n-1.
  EXPECT_EQ(t.entries.size(), 3u);
}

TEST(RefinedFinalCycle, PublishedEntries) {
  const RefinedTable z = oracle::refined_final_cycle(parse_pattern("3-12"), 4);
  EXPECT_EQ(z.at({1, 3}), YPoly::y());
  EXPECT_EQ(z.at({1, 2}), y_poly({0, 2}));
  EXPECT_EQ(z.at({1, 4}), y_poly({0, 2}));

  const RefinedTable r = oracle::refined_final_cycle(parse_pattern("3-21"), 4);
  EXPECT_EQ(r.at({1, 2}), YPoly::y());
  EXPECT_EQ(r.at({1, 3}), y_poly({0, 2}));
  EXPECT_EQ(r.at({2, 4}), y_poly({0, 0, 1}));
  EXPECT_TRUE(r.long_final_at({2, 4}).is_zero());
  EXPECT_TRUE(r.long_final_at({3, 4}).is_zero());
  for (int j = 2; j <= 4; ++j) EXPECT_EQ(r.long_final_at({1, j}), r.at({1, j}));
}

TEST(RefinedFinalCycle, EntriesSumToDistribution) {
  for (const char* name : {"3-12", "3-21", "23-1"}) {
    const VincularPattern p = parse_pattern(name);
    for (int n = 2; n <= 8; ++n) {
      EXPECT_EQ(oracle::refined_final_cycle(p, n).total(), oracle::distribution(p, n)) << name << " n=" << n;
    }
  }
}

TEST(MatchingAvoiders, PowersOfTwo) {
  EXPECT_EQ(oracle::matching_avoiders(parse_pattern("31-2"), 4), 8);
  EXPECT_EQ(oracle::matching_avoiders(parse_pattern("21-3"), 3), 4);
  for (const auto& name : canonical_pattern_names()) {
    EXPECT_EQ(oracle::matching_avoiders(parse_pattern(name), 1), 1) << name;
  }
  for (int m = 1; m <= 6; ++m) {
    const BigInt expected = pow_int(BigInt(2), static_cast<unsigned>(m - 1));
    EXPECT_EQ(oracle::matching_avoiders(parse_pattern("31-2"), m), expected);
    EXPECT_EQ(oracle::matching_avoiders(parse_pattern("21-3"), m), expected);
  }
}

TEST(Equivalences, VincularAndClassicalTwins) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_TRUE(oracle::same_avoiders(parse_pattern("2-31"), parse_pattern("2-3-1"), n));
    EXPECT_TRUE(oracle::same_avoiders(parse_pattern("2-13"), parse_pattern("2-1-3"), n));
    EXPECT_EQ(oracle::distribution(parse_pattern("23-1"), n), oracle::distribution(parse_pattern("32-1"), n));
  }
  // Wilf-equivalent but different avoider sets.
  EXPECT_FALSE(oracle::same_avoiders(parse_pattern("23-1"), parse_pattern("32-1"), 5));
}

}  // namespace
}  // namespace flatder
