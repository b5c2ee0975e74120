#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

namespace bv = braidvol;
using bv::EtaKind;
using bv::testing::sw;

namespace {

bv::XYWord xy(std::string_view s) {
  bv::XYWord w;
  for (char c : s) w.letters.push_back(c == 'x' ? bv::XY::x : bv::XY::y);
  return w;
}

bv::BraidWord letters(std::string_view s) { return bv::parse_braid(s, 3); }

using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST(ToXY, Substitution) {
  EXPECT_EQ(bv::to_xy(letters("s1^-1 s2")), xy("xyxyy"));
  EXPECT_EQ(bv::to_xy(letters("s2")), xy("xyy"));
  EXPECT_EQ(bv::to_xy(letters("s1")), xy("yyx"));
  EXPECT_EQ(bv::to_xy(letters("s2^-1")), xy("yx"));
  EXPECT_EQ(bv::to_xy(sw(3, {{1, -3}, {2, -3}})), xy("xyxyxyyxyxyx"));
  EXPECT_THROW(bv::to_xy(bv::parse_braid("s3", 4)), std::invalid_argument);
}

TEST(NormalizeXY, Examples) {
  auto e = bv::normalize_xy(xy("xyxyxyyxyxyx"));
  EXPECT_EQ(e.j, -1);
  EXPECT_EQ(e.pattern, bv::EtaPattern::alternating);
  EXPECT_EQ(e.pairs, (Pairs{{1, 1}, {1, 1}}));

  e = bv::normalize_xy(xy("xx"));
  EXPECT_EQ(e.j, -1);
  EXPECT_EQ(e.pattern, bv::EtaPattern::one);
  e = bv::normalize_xy(xy("yyyy"));
  EXPECT_EQ(e.j, 1);
  EXPECT_EQ(e.pattern, bv::EtaPattern::y);
  // Seam: yy | y wraps to C.
  e = bv::normalize_xy(xy("yxyy"));
  EXPECT_EQ(e.j, 1);
  EXPECT_EQ(e.pattern, bv::EtaPattern::x);
  e = bv::normalize_xy(xy("yxyxy"));
  EXPECT_EQ(e.j, 0);
  EXPECT_EQ(e.pattern, bv::EtaPattern::alternating);
  EXPECT_EQ(e.pairs, (Pairs{{1, 1}}));
}

TEST(NormalizeXY, NoForbiddenRunsSurvive) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto w = bv::testing::random_word3(rng, 16);
    const auto r = bv::reduce_xy(bv::to_xy(w));
    const auto& v = r.letters;
    const std::size_t l = v.size();
    for (std::size_t i = 0; i < l && l > 1; ++i) {
      if (v[i] == bv::XY::x) {
        EXPECT_NE(v[(i + 1) % l], bv::XY::x) << bv::to_string(w);
      }
      if (l >= 3 && v[i] == bv::XY::y && v[(i + 1) % l] == bv::XY::y) {
        EXPECT_NE(v[(i + 2) % l], bv::XY::y) << bv::to_string(w);
      }
    }
  }
}

TEST(ToSigmaForm, Examples) {
  bv::Eta e;
  e.j = -1;
  e.pattern = bv::EtaPattern::alternating;
  e.pairs = {{1, 1}, {1, 1}};
  auto f = bv::to_sigma_form(e);
  EXPECT_EQ(f.k, -1);
  EXPECT_EQ(f.kind, EtaKind::Generic);
  EXPECT_EQ(f.s, 2);

  e = {};
  e.pattern = bv::EtaPattern::x;
  f = bv::to_sigma_form(e);
  EXPECT_EQ(f.k, -1);
  EXPECT_EQ(f.kind, EtaKind::Sigma121);
  EXPECT_TRUE(f.degenerate_eta);

  e = {};
  e.j = 2;
  e.pattern = bv::EtaPattern::y2;
  f = bv::to_sigma_form(e);
  EXPECT_EQ(f.k, 2);
  EXPECT_EQ(f.kind, EtaKind::Sigma1212);
}

TEST(NormalForm, Examples) {
  auto f = bv::schreier_normal_form(bv::testing::ladder(2));
  EXPECT_EQ(f.k, -2);
  EXPECT_EQ(f.kind, EtaKind::Generic);
  EXPECT_EQ(f.pairs, (Pairs(4, {1, 1})));
  EXPECT_EQ(f.s, 4);

  f = bv::schreier_normal_form(letters("s1^-1 s2"));
  EXPECT_EQ(f.k, 0);
  EXPECT_EQ(f.pairs, (Pairs{{1, 1}}));
  EXPECT_EQ(f.s, 1);

  f = bv::schreier_normal_form(sw(3, {{2, 3}, {1, -3}, {2, -4}, {1, -3}}));
  EXPECT_EQ(f.k, -1);
  EXPECT_EQ(f.s, 3);
  EXPECT_EQ(f.pairs, (Pairs{{2, 1}, {2, 1}, {2, 3}}));

  EXPECT_EQ(bv::schreier_normal_form(letters("")).kind, EtaKind::Empty);
  EXPECT_THROW(bv::schreier_normal_form(bv::parse_braid("s1", 4)), std::invalid_argument);
}

TEST(NormalForm, Genericity) {
  EXPECT_TRUE(bv::is_generic(bv::schreier_normal_form(bv::testing::ladder(1))));
  EXPECT_FALSE(bv::is_generic(bv::schreier_normal_form(letters("s1^4"))));
  EXPECT_FALSE(bv::is_generic(bv::schreier_normal_form(letters(""))));
  EXPECT_EQ(bv::schreier_normal_form(letters("s2^5")), bv::schreier_normal_form(letters("s1^5")));
}

TEST(NormalForm, PairsAreLeastRotation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto f = bv::schreier_normal_form(bv::testing::random_word3(rng, 14));
    if (!bv::is_generic(f)) continue;
    EXPECT_EQ(f.s, static_cast<int>(f.pairs.size()));
    for (std::size_t r = 1; r < f.pairs.size(); ++r) {
      Pairs rot = f.pairs;
      std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(r), rot.end());
      EXPECT_LE(f.pairs, rot);
    }
    for (auto [p, q] : f.pairs) {
      EXPECT_GE(p, 1);
      EXPECT_GE(q, 1);
    }
  }
}

TEST(DirectRead, Examples) {
  const auto l2 = bv::testing::ladder(2);
  EXPECT_EQ(bv::direct_read_k(l2), -2);
  EXPECT_EQ(bv::direct_read_s(l2), 4);
  const auto alt = sw(3, {{1, 3}, {2, -3}, {1, 2}, {2, -4}});
  EXPECT_EQ(bv::direct_read_k(alt), 0);
  EXPECT_EQ(bv::direct_read_s(alt), 2);
  const auto mixed = sw(3, {{2, 3}, {1, -3}, {2, -4}, {1, -3}});
  EXPECT_EQ(bv::direct_read_k(mixed), -1);
  EXPECT_EQ(bv::direct_read_s(mixed), 3);
  EXPECT_THROW(bv::direct_read_k(sw(3, {{1, -2}, {2, -3}})), bv::GateError);
}

TEST(DirectRead, AgreesWithAlgorithmOnGeneratedFamily) {
  bv::GeneratorSpec spec;
  spec.count = 200;
  for (int len : {4, 6, 8, 10}) {
    spec.syllable_count = len;
    spec.seed = static_cast<std::uint64_t>(len);
    for (const auto& w : bv::generate_family(spec)) {
      const auto f = bv::schreier_normal_form(w);
      ASSERT_TRUE(bv::is_generic(f)) << bv::to_string(w);
      EXPECT_EQ(f.k, bv::direct_read_k(w)) << bv::to_string(w);
      EXPECT_EQ(f.s, bv::direct_read_s(w)) << bv::to_string(w);
      EXPECT_TRUE(bv::is_hyperbolic_closure_3braid(w).hyperbolic) << bv::to_string(w);
    }
  }
}

TEST(Conjugacy, Examples) {
  const auto w = sw(3, {{2, 3}, {1, -3}, {2, -4}, {1, -3}});
  auto e = bv::expand(w);
  for (std::size_t r = 0; r < e.letters.size(); ++r) {
    bv::BraidWord rot = e;
    std::rotate(rot.letters.begin(), rot.letters.begin() + static_cast<std::ptrdiff_t>(r), rot.letters.end());
    EXPECT_TRUE(bv::conjugate_3braids(e, rot));
  }
  EXPECT_TRUE(bv::conjugate_3braids(letters("s1^-1 s2"), letters("s2 s1^-1")));
  EXPECT_FALSE(bv::conjugate_3braids(sw(3, {{1, -3}, {2, -3}}), sw(3, {{1, -3}, {2, -4}})));
}

// Normal form invariance under conjugating moves; cross-checked by the SL(2,Z) trace.
TEST(Conjugacy, InvariantUnderMutation) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = bv::testing::random_word3(rng, 12);
    const auto f = bv::schreier_normal_form(w);
    const auto tr = bv::testing::sl2_trace(w);
    for (int step = 0; step < 10; ++step) {
      w = bv::testing::mutate3(rng, w);
      EXPECT_EQ(bv::schreier_normal_form(w), f) << bv::to_string(w);
      EXPECT_EQ(bv::testing::sl2_trace(w), tr);
    }
  }
}

TEST(Conjugacy, EqualFormsHaveEqualInvariants) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = bv::testing::random_word3(rng, 8);
    const auto b = bv::testing::random_word3(rng, 8);
    if (!bv::conjugate_3braids(a, b)) continue;
    EXPECT_EQ(bv::exponent_sum(a), bv::exponent_sum(b));
    EXPECT_EQ(bv::testing::sl2_trace(a), bv::testing::sl2_trace(b));
  }
}

TEST(RoundTrip, ExpansionRenormalizes) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto w = bv::testing::random_word3(rng, 12);
    const auto f = bv::schreier_normal_form(w);
    const auto back = bv::to_letters(f);
    EXPECT_EQ(bv::schreier_normal_form(back), f) << bv::to_string(w);
    EXPECT_EQ(bv::exponent_sum(back), bv::exponent_sum(w));
    EXPECT_EQ(bv::testing::sl2_trace(back), bv::testing::sl2_trace(w));
    if (bv::is_generic(f)) {
      int sum = 6 * f.k;
      for (auto [p, q] : f.pairs) sum += q - p;
      EXPECT_EQ(sum, bv::exponent_sum(w));
    }
  }
}

TEST(Hyperbolicity, Examples) {
  auto v = bv::is_hyperbolic_closure_3braid(sw(3, {{1, -3}, {2, -3}}));
  EXPECT_FALSE(v.hyperbolic);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(bv::conjugate_3braids(letters("s1^-3 s2^-3"),
                                    bv::parse_braid("s1^" + std::to_string(v.witness->first) + " s2^" +
                                                        std::to_string(v.witness->second),
                                                    3)));
  EXPECT_TRUE(bv::is_hyperbolic_closure_3braid(bv::testing::ladder(2)).hyperbolic);
  // Generic in normal form, but conjugate to itself as a s1^p s2^q word.
  v = bv::is_hyperbolic_closure_3braid(letters("s1^2 s2^3"));
  EXPECT_FALSE(v.hyperbolic);
  EXPECT_EQ(v.witness, (std::pair{2, 3}));
  EXPECT_EQ(bv::is_hyperbolic_closure_3braid(letters("s1^5")).reason, "non-generic");
}

TEST(Hyperbolicity, TwoSyllableWordsNeverHyperbolic) {
  for (int p = -5; p <= 5; ++p)
    for (int q = -5; q <= 5; ++q) {
      if (p == 0 || q == 0) continue;
      const auto v = bv::is_hyperbolic_closure_3braid(sw(3, {{1, p}, {2, q}}));
      EXPECT_FALSE(v.hyperbolic) << p << " " << q;
    }
}

// The search bound reaches every witness found by a much wider search.
TEST(Hyperbolicity, SearchBoundSufficesOnTwoSyllableWords) {
  for (int p = -8; p <= 8; ++p)
    for (int q = -8; q <= 8; ++q) {
      if (p == 0 || q == 0) continue;
      const auto w = letters("s1^" + std::to_string(p) + " s2^" + std::to_string(q));
      const auto f = bv::schreier_normal_form(w);
      EXPECT_GE(bv::conjugacy_search_bound(f, p + q), std::abs(p));
    }
}
