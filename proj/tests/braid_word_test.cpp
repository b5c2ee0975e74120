#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

namespace bv = braidvol;
using bv::testing::sw;

TEST(Parse, SyllableTokens) {
  const auto w = bv::parse_braid("s1^3 s2^-3 s1^2 s3^-2 s2 s3", 4);
  EXPECT_EQ(w.strands, 4);
  EXPECT_EQ(w.letters, (std::vector<int>{1, 1, 1, -2, -2, -2, 1, 1, -3, -3, 2, 3}));
}

TEST(Parse, EmptyAndIntegerTokens) {
  EXPECT_TRUE(bv::parse_braid("", 3).letters.empty());
  EXPECT_EQ(bv::parse_braid("", 3).strands, 3);
  EXPECT_EQ(bv::parse_braid("1 1 -2", 3).letters, (std::vector<int>{1, 1, -2}));
}

TEST(Parse, InfersStrandCount) {
  EXPECT_EQ(bv::parse_braid("s1 s3^-1").strands, 4);
  EXPECT_EQ(bv::parse_braid("-2").strands, 3);
}

TEST(Parse, Errors) {
  EXPECT_THROW(bv::parse_braid("s1^x"), bv::ParseError);
  EXPECT_THROW(bv::parse_braid("t1"), bv::ParseError);
  EXPECT_THROW(bv::parse_braid("s0"), bv::ParseError);
  EXPECT_THROW(bv::parse_braid("s3", 3), bv::ParseError);
  EXPECT_THROW(bv::parse_braid("0"), bv::ParseError);
  EXPECT_THROW(bv::parse_braid("", 0), bv::ParseError);
}

TEST(Parse, ZeroExponentIsIdentity) { EXPECT_TRUE(bv::parse_braid("s1^0", 2).letters.empty()); }

TEST(Mirror, FlipsSignsAndIsAnInvolution) {
  const bv::BraidWord w{3, {1, 1, -2}};
  EXPECT_EQ(bv::mirror(w).letters, (std::vector<int>{-1, -1, 2}));
  EXPECT_TRUE(bv::mirror(bv::BraidWord{3, {}}).letters.empty());
  const bv::BraidWord u{4, {1, -2, 3}};
  EXPECT_EQ(bv::mirror(bv::mirror(u)).letters, u.letters);
}

TEST(ExponentSum, Examples) {
  EXPECT_EQ(bv::exponent_sum(bv::BraidWord{3, {1, 1, -2}}), 1);
  EXPECT_EQ(bv::exponent_sum(bv::BraidWord{3, {}}), 0);
  EXPECT_EQ(bv::exponent_sum(bv::parse_braid("s1^3 s2^-3 s1^2 s3^-2 s2 s3", 4)), 2);
}

TEST(CyclicReduce, TotalCancellation) {
  const auto r = bv::cyclically_reduce_into_syllables({3, {1, 2, -2, -1}});
  EXPECT_TRUE(r.empty());
}

TEST(CyclicReduce, SeamCancellation) {
  const auto r = bv::cyclically_reduce_into_syllables({3, {-2, 1, 1, 1, 2}});
  EXPECT_EQ(r, sw(3, {{1, 3}}));
}

TEST(CyclicReduce, ExampleWord) {
  const auto r = bv::cyclically_reduce_into_syllables(bv::parse_braid("s1^3 s2^-3 s1^2 s3^-2 s2 s3", 4));
  EXPECT_EQ(r, sw(4, {{1, 3}, {2, -3}, {1, 2}, {3, -2}, {2, 1}, {3, 1}}));
  EXPECT_TRUE(r.cyclically_reduced);
}

TEST(CyclicReduce, SeamMergeRecordsRotation) {
  const auto r = bv::cyclically_reduce_into_syllables({3, {1, 2, 2, 1}});
  EXPECT_EQ(r, sw(3, {{1, 2}, {2, 2}}));
  EXPECT_EQ(r.rotation, 1u);
}

TEST(CyclicReduce, PropertiesOnRandomWords) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n = nd(rng);
    std::uniform_int_distribution<int> gen(1, n - 1), len(0, 14);
    std::bernoulli_distribution sign(0.5);
    bv::BraidWord w{n, {}};
    for (int i = len(rng); i > 0; --i) w.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));

    const auto r = bv::cyclically_reduce_into_syllables(w);
    EXPECT_EQ(bv::exponent_sum(r), bv::exponent_sum(w));
    EXPECT_EQ(bv::cyclically_reduce_into_syllables(bv::expand(r)), r) << bv::to_string(w);
    const auto back = bv::parse_braid(bv::to_string(bv::expand(r)), n);
    EXPECT_EQ(bv::cyclically_reduce_into_syllables(back), r);
    // Syllable invariants.
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_NE(r.syllables[i].exp, 0);
      if (r.size() >= 2) {
        EXPECT_NE(r.syllables[i].gen, r.at_cyclic(static_cast<std::ptrdiff_t>(i) + 1).gen);
      }
    }
  }
}

TEST(CyclicReduce, ThreeStrandResultIsConjugate) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto w = bv::testing::random_word3(rng, 12);
    const auto r = bv::expand(bv::cyclically_reduce_into_syllables(w));
    EXPECT_EQ(bv::testing::sl2_trace(r), bv::testing::sl2_trace(w));
  }
}

TEST(CompleteSubwords, Examples) {
  const auto four = sw(3, {{1, -3}, {2, -3}, {1, -3}, {2, -3}});
  const auto wit = bv::has_disjoint_complete_subwords(four);
  ASSERT_TRUE(wit.found);
  ASSERT_TRUE(wit.windows.has_value());
  EXPECT_EQ(wit.windows->first.begin, 0u);
  EXPECT_EQ(wit.windows->first.end, 2u);
  EXPECT_EQ(wit.windows->second.begin, 2u);
  EXPECT_EQ(wit.windows->second.end, 4u);
  EXPECT_FALSE(bv::has_disjoint_complete_subwords(sw(3, {{1, -3}, {2, -3}})).found);
  EXPECT_FALSE(bv::has_disjoint_complete_subwords(sw(4, {{1, 3}, {2, -3}, {1, 2}, {3, -2}, {2, 1}, {3, 1}})).found);
}

TEST(CompleteSubwords, CyclicOnlyNearMiss) {
  // Only the pair (s2 s1 | s3) wrapping the seam and (s2 s3 s1) covers every generator.
  const auto w = sw(4, {{3, -3}, {2, -3}, {3, -3}, {1, -3}, {2, -3}, {1, -3}});
  const auto wit = bv::has_disjoint_complete_subwords(w);
  EXPECT_FALSE(wit.found);
  EXPECT_TRUE(wit.cyclic_only);
  EXPECT_FALSE(bv::testing::brute_force_complete_pair(w));
  const auto r = bv::check_main_lemma(w);
  EXPECT_FALSE(r.nice);
  EXPECT_TRUE(r.nice_cyclic_only);
}

TEST(CompleteSubwords, AgreesWithExhaustiveWindowSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 3000; ++trial) {
    std::uniform_int_distribution<int> nd(3, 6);
    const int n = nd(rng);
    std::uniform_int_distribution<int> gen(1, n - 1), len(1, 10);
    std::vector<bv::Syllable> s;
    for (int i = len(rng); i > 0; --i) {
      int g = gen(rng);
      if (!s.empty() && s.back().gen == g) g = g % (n - 1) + 1;
      s.push_back({g, -3});
    }
    const auto w = sw(n, s);
    EXPECT_EQ(bv::has_disjoint_complete_subwords(w).found, bv::testing::brute_force_complete_pair(w))
        << bv::to_string(w);
  }
}

TEST(Nice, Examples) {
  EXPECT_TRUE(bv::is_nice(sw(3, {{1, -3}, {2, -3}, {1, -3}, {2, -3}})));
  EXPECT_FALSE(bv::is_nice(sw(3, {{1, -3}, {2, -3}})));
  EXPECT_FALSE(bv::is_nice(sw(2, {{1, 5}})));
}

TEST(Nice, ThreeStrandsMeansEachGeneratorTwice) {
  for (int l = 1; l <= 6; ++l) {
    std::vector<bv::Syllable> s;
    for (int i = 0; i < 2 * l; ++i) s.push_back({i % 2 + 1, -3});
    EXPECT_EQ(bv::is_nice(sw(3, s)), l >= 2);
  }
}
