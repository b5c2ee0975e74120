#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "braidvol/braid_word.hpp"
#include "braidvol/laurent.hpp"

namespace braidvol {

class CrossingCapExceeded : public std::runtime_error {
public:
  CrossingCapExceeded(std::size_t c, std::size_t cap)
      : std::runtime_error("bracket oracle refused: " + std::to_string(c) + " crossings exceeds cap " +
                           std::to_string(cap)),
        crossings(c),
        cap(cap) {}
  std::size_t crossings;
  std::size_t cap;
};

class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_max_crossings = 20;

namespace detail {

// Smoothing geometry of a closed braid. Point (level, pos) -> level*n + pos-1.
// Per crossing, "identity" joins (l,i)-(l+1,i) and (l,i+1)-(l+1,i+1);
// "turnback" joins (l,i)-(l,i+1) and (l+1,i)-(l+1,i+1). The A-smoothing is the
// identity for positive letters and the turnback for negative ones.
class SmoothingModel {
public:
  explicit SmoothingModel(const SyllableWord& word) {
    const BraidWord b = expand(word);
    n_ = word.strands;
    levels_ = static_cast<int>(b.letters.size());
    points_ = (levels_ + 1) * n_;
    base_.resize(static_cast<std::size_t>(points_));
    std::iota(base_.begin(), base_.end(), 0);
    base_components_ = points_;
    auto pt = [&](int l, int p) { return l * n_ + (p - 1); };
    for (int l = 0; l < levels_; ++l) {
      const int g = b.letters[static_cast<std::size_t>(l)];
      const int i = std::abs(g);
      for (int p = 1; p <= n_; ++p)
        if (p != i && p != i + 1) base_components_ -= unite(base_, pt(l, p), pt(l + 1, p));
      Crossing c;
      c.identity = {pt(l, i), pt(l + 1, i), pt(l, i + 1), pt(l + 1, i + 1)};
      c.turnback = {pt(l, i), pt(l, i + 1), pt(l + 1, i), pt(l + 1, i + 1)};
      c.positive = g > 0;
      crossings_.push_back(c);
    }
    for (int p = 1; p <= n_; ++p) base_components_ -= unite(base_, pt(levels_, p), pt(0, p));
    for (int v = 0; v < points_; ++v) base_[static_cast<std::size_t>(v)] = find(base_, v);
  }

  std::size_t crossings() const noexcept { return crossings_.size(); }

  // Loop count when crossing k takes its A-smoothing iff bit k of mask is set.
  int loops(std::uint64_t a_mask, std::vector<int>& scratch) const {
    scratch = base_;
    int comps = base_components_;
    for (std::size_t k = 0; k < crossings_.size(); ++k) {
      const Crossing& c = crossings_[k];
      const bool a = (a_mask >> k) & 1U;
      const auto& arcs = (a == c.positive) ? c.identity : c.turnback;
      comps -= unite(scratch, arcs[0], arcs[1]);
      comps -= unite(scratch, arcs[2], arcs[3]);
    }
    return comps;
  }

private:
  struct Crossing {
    std::array<int, 4> identity{};
    std::array<int, 4> turnback{};
    bool positive = true;
  };

  static int find(std::vector<int>& p, int v) {
    while (p[static_cast<std::size_t>(v)] != v) {
      p[static_cast<std::size_t>(v)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
      v = p[static_cast<std::size_t>(v)];
    }
    return v;
  }
  static int unite(std::vector<int>& p, int a, int b) {
    a = find(p, a);
    b = find(p, b);
    if (a == b) return 0;
    p[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return 1;
  }

  int n_ = 1;
  int levels_ = 0;
  int points_ = 0;
  int base_components_ = 0;
  std::vector<int> base_;
  std::vector<Crossing> crossings_;
};

inline LaurentPolynomial delta_power(int k) {
  const LaurentPolynomial delta = LaurentPolynomial::monomial(2, -1) + LaurentPolynomial::monomial(-2, -1);
  LaurentPolynomial r = LaurentPolynomial::monomial(0, 1);
  for (int i = 0; i < k; ++i) r = r * delta;
  return r;
}

}  // namespace detail

// Sum over all 2^c smoothings of A^(a-b) delta^(loops-1), delta = -A^2 - A^-2.
// Chunks of the state space are summed independently; integer histograms make
// the result independent of the partition.
inline LaurentPolynomial kauffman_bracket(const SyllableWord& word,
                                          std::size_t max_crossings = default_max_crossings,
                                          unsigned threads = 0) {
  const detail::SmoothingModel model(word);
  const std::size_t c = model.crossings();
  if (c > max_crossings || c > 62) throw CrossingCapExceeded(c, max_crossings);
  const std::uint64_t states = std::uint64_t{1} << c;
  const int max_loops = (static_cast<int>(c) + 1) * word.strands + 1;

  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, states >> 10)));
  const std::size_t width = static_cast<std::size_t>(max_loops + 1);
  // hist[a * width + loops]
  std::vector<std::vector<std::uint64_t>> hist(threads, std::vector<std::uint64_t>((c + 1) * width, 0));
  auto work = [&](unsigned t) {
    std::vector<int> scratch;
    const std::uint64_t lo = states * t / threads;
    const std::uint64_t hi = states * (t + 1) / threads;
    auto& h = hist[t];
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
      const int a = std::popcount(mask);
      h[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(model.loops(mask, scratch))]++;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  std::vector<LaurentPolynomial> dpow(width);
  LaurentPolynomial result;
  for (std::size_t a = 0; a <= c; ++a) {
    for (std::size_t loops = 1; loops < width; ++loops) {
      std::uint64_t count = 0;
      for (const auto& h : hist) count += h[a * width + loops];
      if (count == 0) continue;
      if (dpow[loops].is_zero()) dpow[loops] = detail::delta_power(static_cast<int>(loops) - 1);
      const int shift = static_cast<int>(a) - static_cast<int>(c - a);
      result += BigInt(count) * dpow[loops].shifted(shift);
    }
  }
  return result;
}

struct BracketSummary {
  std::size_t crossings = 0;
  int all_A_circles = 0;
  int top_degree = 0;
  BigInt top_coefficient = 0;
  BigInt penultimate_abs = 0;
  LaurentPolynomial bracket;
};

// Loop count of the all-A state, and whether every single-crossing switch
// merges two distinct all-A loops (A-adequacy), computed on the smoothing model.
inline std::pair<int, bool> all_A_loops_and_adequacy(const SyllableWord& word) {
  const detail::SmoothingModel model(word);
  const std::size_t c = model.crossings();
  if (c > 62) throw CrossingCapExceeded(c, 62);
  std::vector<int> scratch;
  const std::uint64_t all_a = (std::uint64_t{1} << c) - 1;
  const int sA = model.loops(all_a, scratch);
  bool adequate = true;
  for (std::size_t k = 0; k < c && adequate; ++k)
    adequate = model.loops(all_a & ~(std::uint64_t{1} << k), scratch) == sA - 1;
  return {sA, adequate};
}

// Penultimate coefficient at the all-A end of the bracket; equals 1 - chi(G'_A)
// for A-adequate diagrams.
inline BracketSummary stable_penultimate_coefficient(const SyllableWord& word,
                                                     std::size_t max_crossings = default_max_crossings,
                                                     unsigned threads = 0) {
  const std::size_t c = crossing_count(word);
  if (c > max_crossings) throw CrossingCapExceeded(c, max_crossings);
  const auto [sA, adequate] = all_A_loops_and_adequacy(word);
  if (!adequate) throw OracleError("stable_penultimate_coefficient: diagram is not A-adequate");
  BracketSummary s;
  s.crossings = c;
  s.all_A_circles = sA;
  s.bracket = kauffman_bracket(word, max_crossings, threads);
  s.top_degree = static_cast<int>(c) + 2 * (sA - 1);
  if (s.bracket.is_zero() || s.bracket.max_degree() != s.top_degree)
    throw OracleError("oracle inconsistency: bracket top degree differs from c + 2(|s_A| - 1) = " +
                      std::to_string(s.top_degree));
  s.top_coefficient = s.bracket.coefficient(s.top_degree);
  if (abs(s.top_coefficient) != 1)
    throw OracleError("oracle inconsistency: |top coefficient| = " + BigInt(abs(s.top_coefficient)).str() + " != 1");
  s.penultimate_abs = abs(s.bracket.coefficient(s.top_degree - 4));
  return s;
}

}  // namespace braidvol
