#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "flatder/permutation.hpp"
#include "support/naive.hpp"

namespace flatder {
namespace {

TEST(Permutation, RejectsMalformedWords) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({1, 4, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("12a"), std::invalid_argument);
}

TEST(Permutation, ParsesDigitsAndLists) {
  EXPECT_EQ(Permutation::parse("419738265").to_string(), "419738265");
  const Permutation ten = Permutation::parse("2, 1, 4, 3, 6, 5, 8, 7, 10, 9");
  EXPECT_EQ(ten.size(), 10);
  EXPECT_EQ(ten(9), 10);
}

TEST(CycleForm, StandardFormOfWorkedExample) {
  const CycleForm c = standard_cycle_form(Permutation::parse("419738265"));
  EXPECT_EQ(c.to_string(), "(1472)(395)(68)");
  EXPECT_EQ(c.cycle_count(), 3);
}

TEST(CycleForm, IdentityHasSingletonCycles) {
  EXPECT_EQ(standard_cycle_form(Permutation::identity(3)).to_string(), "(1)(2)(3)");
  EXPECT_EQ(cycle_count(Permutation::identity(5)), 5);
}

TEST(CycleForm, TwoElementDerangement) {
  const Permutation p = Permutation::parse("21");
  EXPECT_EQ(standard_cycle_form(p).to_string(), "(12)");
  EXPECT_EQ(cycle_count(p), 1);
  EXPECT_EQ(flatten(standard_cycle_form(p)).to_string(), "12");
}

TEST(CycleForm, RejectsNonStandardCycles) {
  EXPECT_THROW(CycleForm({{2, 1}}), std::invalid_argument);
  EXPECT_THROW(CycleForm({{2, 3}, {1, 4}}), std::invalid_argument);
  EXPECT_THROW(CycleForm({{1, 2}, {4}}), std::invalid_argument);
}

TEST(Flatten, ErasesParentheses) {
  EXPECT_EQ(flatten(CycleForm({{1, 3, 5}, {2, 6}, {4, 7, 8}})).to_string(), "13526478");
  EXPECT_EQ(flatten(CycleForm({{1, 4, 7, 2}, {3, 9, 5}, {6, 8}})).to_string(), "147239568");
  EXPECT_EQ(flatten(CycleForm({{1, 2}})).to_string(), "12");
}

TEST(Flatten, FlatFormRecordsCycleStarts) {
  FlatForm flat;
  const Permutation p = Permutation::parse("419738265");
  flatten_into(p.word(), flat);
  EXPECT_EQ(flat.letters, (std::vector<int>{1, 4, 7, 2, 3, 9, 5, 6, 8}));
  EXPECT_EQ(flat.cycle_offsets, (std::vector<int>{0, 4, 7}));
  EXPECT_EQ(flat.cycle_count(), 3);
}

TEST(Derangements, SmallCases) {
  DerangementStream one(1);
  EXPECT_FALSE(one.next());

  std::vector<Permutation> two;
  for (const auto& p : iter_derangements(2)) two.push_back(p);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0].to_string(), "21");

  auto four = iter_derangements(4);
  int count = 0;
  for (const auto& p : four) {
    EXPECT_TRUE(p.is_derangement());
    ++count;
  }
  EXPECT_EQ(count, 9);
}

TEST(Derangements, MatchFilterFromAllPermutations) {
  for (int n = 1; n <= 7; ++n) {
    std::set<std::vector<int>> streamed;
    DerangementStream stream(n);
    while (stream.next()) streamed.emplace(stream.word().begin(), stream.word().end());
    const auto filtered = testing::derangements_by_filter(n);
    EXPECT_EQ(streamed, std::set<std::vector<int>>(filtered.begin(), filtered.end())) << "n=" << n;
  }
}

TEST(Derangements, CountsFollowDerangementNumbers) {
  for (int n = 1; n <= 10; ++n) {
    DerangementStream stream(n);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    EXPECT_EQ(count, testing::derangement_number(n)) << "n=" << n;
  }
}

TEST(Derangements, LexicographicWithinOneShard) {
  DerangementStream stream(5);
  std::vector<int> prev;
  while (stream.next()) {
    std::vector<int> cur(stream.word().begin(), stream.word().end());
    EXPECT_LT(prev, cur);
    prev = std::move(cur);
  }
}

TEST(Matchings, CountsAreDoubleFactorials) {
  EXPECT_THROW(MatchingStream(3), std::invalid_argument);
  EXPECT_THROW(MatchingStream(0), std::invalid_argument);
  for (int m = 1; m <= 5; ++m) {
    std::uint64_t count = 0;
    for (const auto& p : iter_matchings(2 * m)) {
      EXPECT_TRUE(p.is_derangement());
      EXPECT_EQ(cycle_count(p), m);
      ++count;
    }
    EXPECT_EQ(count, testing::double_factorial_odd(m)) << "m=" << m;
  }
}

TEST(Matchings, SmallestCases) {
  std::vector<std::string> two;
  for (const auto& p : iter_matchings(2)) two.push_back(p.to_string());
  EXPECT_EQ(two, std::vector<std::string>{"21"});
  std::vector<std::string> four;
  for (const auto& p : iter_matchings(4)) four.push_back(p.to_string());
  EXPECT_EQ(four, (std::vector<std::string>{"2143", "3412", "4321"}));
}

}  // namespace
}  // namespace flatder
