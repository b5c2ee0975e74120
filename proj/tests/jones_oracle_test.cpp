#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "support/oracles.hpp"

namespace bv = braidvol;
using bv::BigInt;
using bv::LaurentPolynomial;
using bv::testing::sw;

namespace {

BigInt at_one(const LaurentPolynomial& p) {
  BigInt s = 0;
  for (const auto& [d, c] : p.terms()) s += c;
  return s;
}

// Number of closure components: cycles of the underlying permutation.
int components(const bv::BraidWord& w) {
  std::vector<int> perm(static_cast<std::size_t>(w.strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int g : w.letters) std::swap(perm[static_cast<std::size_t>(std::abs(g) - 1)], perm[static_cast<std::size_t>(std::abs(g))]);
  std::vector<char> seen(perm.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = 1;
  }
  return cycles;
}

// Bracket of the diagram exactly as written (no cyclic reduction).
LaurentPolynomial bracket_of(const bv::BraidWord& w) {
  std::vector<bv::Syllable> s;
  for (int g : w.letters) s.push_back({std::abs(g), g > 0 ? 1 : -1});
  return bv::kauffman_bracket(bv::make_syllable_word(w.strands, s));
}

}  // namespace

TEST(Bracket, Unknot) {
  EXPECT_EQ(bv::kauffman_bracket(sw(1, {})), LaurentPolynomial::monomial(0));
  EXPECT_EQ(bv::kauffman_bracket(sw(2, {{1, 1}})), LaurentPolynomial::monomial(3, -1));
  EXPECT_EQ(bv::kauffman_bracket(sw(2, {{1, -1}})), LaurentPolynomial::monomial(-3, -1));
}

TEST(Bracket, UnlinkOfTwo) {
  EXPECT_EQ(bv::kauffman_bracket(sw(2, {})),
            LaurentPolynomial::monomial(2, -1) + LaurentPolynomial::monomial(-2, -1));
}

TEST(Bracket, MatchesSkeinOnTwoStrands) {
  for (int k = -9; k <= 9; ++k) {
    if (k == 0) continue;
    EXPECT_EQ(bv::kauffman_bracket(sw(2, {{1, k}})), bv::testing::skein_two_braid(k)) << k;
  }
}

TEST(Bracket, ValueAtOneCountsComponents) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> nd(2, 4);
    const int n = nd(rng);
    std::uniform_int_distribution<int> g(1, n - 1), len(0, 12);
    std::bernoulli_distribution sign(0.5);
    bv::BraidWord w{n, {}};
    for (int i = len(rng); i > 0; --i) w.letters.push_back(sign(rng) ? g(rng) : -g(rng));
    const int writhe = bv::exponent_sum(w);
    BigInt expected = writhe % 2 == 0 ? 1 : -1;
    for (int i = 1; i < components(w); ++i) expected *= -2;
    EXPECT_EQ(at_one(bracket_of(w)), expected) << bv::to_string(w);
  }
}

TEST(Bracket, ReidemeisterTwoAndThreeInvariance) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 150; ++trial) {
    auto w = bv::testing::random_word3(rng, 8);
    const auto b = bracket_of(w);
    for (int step = 0; step < 4; ++step) {
      w = bv::testing::mutate3(rng, w);
      if (w.letters.size() > 16) break;
      EXPECT_EQ(bracket_of(w), b) << bv::to_string(w);
    }
  }
}

TEST(Bracket, MarkovStabilizationMultipliesByKink) {
  for (const auto& w : {bv::parse_braid("s1^-3 s2^-3", 3), bv::parse_braid("s1 s2^-1 s1 s2^-1", 3)}) {
    bv::BraidWord plus{4, w.letters}, minus{4, w.letters};
    plus.letters.push_back(3);
    minus.letters.push_back(-3);
    const auto b = bracket_of(w);
    EXPECT_EQ(bracket_of(plus), b * LaurentPolynomial::monomial(3, -1));
    EXPECT_EQ(bracket_of(minus), b * LaurentPolynomial::monomial(-3, -1));
  }
}

TEST(Bracket, MirrorInvertsVariable) {
  for (const auto& w : bv::testing::oracle_corpus()) {
    if (bv::crossing_count(w) > 14) continue;
    EXPECT_EQ(bv::kauffman_bracket(bv::mirror(w)), bv::kauffman_bracket(w).mirrored()) << bv::to_string(w);
  }
}

TEST(Bracket, ThreadCountDoesNotChangeResult) {
  const auto w = sw(3, {{1, -3}, {2, -4}, {1, -3}, {2, -5}});
  const auto one = bv::kauffman_bracket(w, 20, 1);
  for (unsigned t : {2U, 3U, 7U, 16U}) EXPECT_EQ(bv::kauffman_bracket(w, 20, t), one);
}

TEST(Bracket, CrossingCap) {
  const auto w = sw(3, {{1, -6}, {2, -6}, {1, -6}, {2, -6}});
  try {
    bv::kauffman_bracket(w);
    FAIL() << "expected cap error";
  } catch (const bv::CrossingCapExceeded& e) {
    EXPECT_EQ(e.crossings, 24u);
    EXPECT_EQ(e.cap, 20u);
  }
  EXPECT_THROW(bv::stable_penultimate_coefficient(w, 10), bv::CrossingCapExceeded);
}

TEST(Bracket, DegreeSpan) {
  for (const auto& w : bv::testing::oracle_corpus()) {
    const std::size_t c = bv::crossing_count(w);
    if (c > 14) continue;
    const auto b = bv::kauffman_bracket(w);
    ASSERT_FALSE(b.is_zero());
    const int max_loops = static_cast<int>(c) * w.strands + w.strands;
    EXPECT_LE(b.max_degree() - b.min_degree(), 2 * static_cast<int>(c) + 4 * (max_loops - 1));
    EXPECT_LE(b.max_degree(), static_cast<int>(c) + 2 * (bv::all_A_loops_and_adequacy(w).first - 1));
    // All degrees share one residue mod 4.
    for (const auto& [d, coeff] : b.terms()) EXPECT_EQ(((d - b.min_degree()) % 4 + 4) % 4, 0);
  }
}

TEST(Penultimate, Examples) {
  auto s = bv::stable_penultimate_coefficient(sw(3, {{1, -3}, {2, -3}}));
  EXPECT_EQ(s.penultimate_abs, 2);
  EXPECT_EQ(abs(s.top_coefficient), 1);
  EXPECT_EQ(s.top_degree, 6 + 2 * (5 - 1));
  s = bv::stable_penultimate_coefficient(bv::testing::ladder(2));
  EXPECT_EQ(s.penultimate_abs, 4);
  s = bv::stable_penultimate_coefficient(sw(2, {{1, 3}}));
  EXPECT_EQ(s.penultimate_abs, 0);
  EXPECT_EQ(s.all_A_circles, 2);
}

TEST(Penultimate, RejectsInadequateDiagrams) {
  EXPECT_THROW(bv::stable_penultimate_coefficient(sw(2, {{1, -1}})), bv::OracleError);
}

TEST(Penultimate, EqualsOneMinusChiOnCorpus) {
  int adequate = 0;
  for (const auto& w : bv::testing::oracle_corpus()) {
    const auto st = bv::analyze_state(w);
    if (!bv::is_A_adequate(st) || bv::crossing_count(w) > 16) continue;
    ++adequate;
    const auto s = bv::stable_penultimate_coefficient(w);
    EXPECT_EQ(s.penultimate_abs, BigInt(1 + bv::reduced_graph(st).neg_chi)) << bv::to_string(w);
  }
  EXPECT_GE(adequate, 25);
}

TEST(Laurent, Arithmetic) {
  const auto a = LaurentPolynomial::monomial(1, 2) + LaurentPolynomial::monomial(-1, -1);
  const auto b = LaurentPolynomial::monomial(1) + LaurentPolynomial::monomial(-1, 1);
  const auto p = a * b;
  EXPECT_EQ(p.coefficient(2), 2);
  EXPECT_EQ(p.coefficient(0), 1);
  EXPECT_EQ(p.coefficient(-2), -1);
  EXPECT_EQ(p.to_string(), "-2:-1 0:1 2:2");
  EXPECT_TRUE((a + BigInt(-1) * a).is_zero());
  EXPECT_EQ(a.mirrored().mirrored(), a);
  EXPECT_EQ(a.shifted(3).min_degree(), 2);
}
