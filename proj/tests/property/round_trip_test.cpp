#include <gtest/gtest.h>

#include <string>

#include "flatder/vincular.hpp"
#include "support/naive.hpp"
#include "support/random.hpp"

namespace flatder {
namespace {

TEST(RoundTrip, CycleFormIsABijectionOnSmallSymmetricGroups) {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : testing::all_permutations(n)) {
      const Permutation p(w);
      const CycleForm c = standard_cycle_form(p);
      EXPECT_EQ(c.to_permutation(), p);
      EXPECT_EQ(CycleForm(c.cycles()), c);
      const Permutation flat = flatten(c);
      EXPECT_EQ(flat(1), 1);
      int cycles = 0;
      EXPECT_EQ(std::vector<int>(flat.word().begin(), flat.word().end()), testing::naive_flatten(w, &cycles));
      EXPECT_EQ(cycle_count(p), cycles);
    }
  }
}

TEST(RoundTrip, FlatFormAgreesWithFlatten) {
  testing::Gen gen;
  FlatForm flat;
  for (int t = 0; t < testing::kTrials; ++t) {
    const Permutation p(gen.permutation(gen.integer(1, 40)));
    flatten_into(p.word(), flat);
    const CycleForm c = standard_cycle_form(p);
    const Permutation expected = flatten(c);
    EXPECT_EQ(flat.letters, std::vector<int>(expected.word().begin(), expected.word().end()));
    EXPECT_EQ(flat.cycle_count(), c.cycle_count());
  }
}

TEST(RoundTrip, PermutationText) {
  testing::Gen gen;
  for (int t = 0; t < testing::kTrials; ++t) {
    const Permutation p(gen.permutation(gen.integer(1, 15)));
    EXPECT_EQ(Permutation::parse(p.to_string()), p);
  }
}

TEST(RoundTrip, PatternText) {
  testing::Gen gen;
  for (int t = 0; t < testing::kTrials; ++t) {
    const int m = gen.integer(1, 9);
    std::string text;
    for (int v : gen.permutation(m)) {
      if (!text.empty() && gen.integer(0, 1) == 1) text += '-';
      text += static_cast<char>('0' + v);
    }
    EXPECT_EQ(parse_pattern(text).to_string(), text);
  }
}

}  // namespace
}  // namespace flatder
