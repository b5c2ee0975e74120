#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidvol/all_a_state.hpp"
#include "braidvol/braid_word.hpp"

namespace braidvol {

enum class Cond2Clause { a, b, c };

inline std::string_view name(Cond2Clause c) {
  switch (c) {
    case Cond2Clause::a: return "2a";
    case Cond2Clause::b: return "2b";
    case Cond2Clause::c: return "2c";
  }
  return "?";
}

struct Cond2Failure {
  std::size_t syllable = 0;
  Cond2Clause clause = Cond2Clause::a;
  std::string reason;
};

// Conclusions that hold for every word in the family. Only meaningful when pass.
struct ImpliedFlags {
  bool connected = false;
  bool prime = false;
  bool A_adequate = false;
  bool TELC = false;
  bool hyperbolic = false;
};

struct MainLemmaReport {
  bool cyclically_reduced = false;
  bool nice = false;
  bool nice_cyclic_only = false;
  bool cond1 = false;
  std::vector<std::size_t> cond1_failures;
  std::vector<Cond2Failure> cond2_failures;
  bool twist_ok = false;
  bool pass = false;
  ImpliedFlags implied;
};

namespace detail {

inline bool strongly_negative(const Syllable& s) { return s.exp <= -3; }

inline std::string describe(const Syllable& s) {
  return "s" + std::to_string(s.gen) + "^" + std::to_string(s.exp);
}

}  // namespace detail

// Evaluates conditions (1), (2a)-(2c) cyclically, niceness and t >= 2(n-1).
// For each positive syllable only the first failing requirement is reported.
inline MainLemmaReport check_main_lemma(const SyllableWord& word) {
  MainLemmaReport r;
  const int n = word.strands;
  const auto l = static_cast<std::ptrdiff_t>(word.size());
  r.cyclically_reduced = word.cyclically_reduced;
  const auto cw = has_disjoint_complete_subwords(word);
  r.nice = word.cyclically_reduced && cw.found;
  r.nice_cyclic_only = cw.cyclic_only;

  for (std::ptrdiff_t i = 0; i < l; ++i) {
    const Syllable& s = word.syllables[static_cast<std::size_t>(i)];
    if (s.exp < 0 && s.exp > -3) r.cond1_failures.push_back(static_cast<std::size_t>(i));
  }
  r.cond1 = r.cond1_failures.empty();

  auto fail = [&](std::ptrdiff_t i, Cond2Clause c, std::string why) {
    r.cond2_failures.push_back({static_cast<std::size_t>(i), c, std::move(why)});
  };
  for (std::ptrdiff_t i = 0; i < l; ++i) {
    const Syllable& s = word.syllables[static_cast<std::size_t>(i)];
    if (s.exp <= 0) continue;
    if (s.gen == 1 || s.gen == n - 1) {
      const Cond2Clause clause = s.gen == 1 ? Cond2Clause::a : Cond2Clause::c;
      const int want = s.gen == 1 ? 2 : n - 2;
      if (n < 3) {
        fail(i, clause, "no neighbouring generator exists for n=" + std::to_string(n));
        continue;
      }
      for (std::ptrdiff_t d : {-1, 1}) {
        const Syllable& nb = word.at_cyclic(i + d);
        if (l < 2 || !detail::strongly_negative(nb) || nb.gen != want) {
          fail(i, clause,
               std::string(d < 0 ? "preceding" : "following") + " neighbour " + detail::describe(nb) +
                   " is not s" + std::to_string(want) + "^r with r <= -3");
          break;
        }
      }
      continue;
    }
    // 2 <= gen <= n-2: two negative syllables on each side in generators {gen-1, gen+1}.
    bool ok = true;
    std::string why;
    for (std::ptrdiff_t side : {-1, 1}) {
      if (!ok) break;
      const Syllable& near = word.at_cyclic(i + side);
      const Syllable& far = word.at_cyclic(i + 2 * side);
      const std::string side_name = side < 0 ? "preceding" : "following";
      if (!detail::strongly_negative(near) || !detail::strongly_negative(far)) {
        ok = false;
        why = side_name + " pair " + detail::describe(far) + "," + detail::describe(near) +
              " not both with exponent <= -3";
      } else {
        const int lo = std::min(near.gen, far.gen);
        const int hi = std::max(near.gen, far.gen);
        if (lo != s.gen - 1 || hi != s.gen + 1) {
          ok = false;
          why = side_name + " pair generators {" + std::to_string(lo) + "," + std::to_string(hi) +
                "} differ from {" + std::to_string(s.gen - 1) + "," + std::to_string(s.gen + 1) + "}";
        }
      }
    }
    if (!ok) fail(i, Cond2Clause::b, why);
  }

  r.twist_ok = static_cast<int>(word.size()) >= 2 * (n - 1);
  r.pass = r.nice && r.cond1 && r.cond2_failures.empty() && r.twist_ok;
  if (r.pass) r.implied = {true, true, true, true, true};
  return r;
}

enum class StoimenowVerdict { adequate, not_adequate, out_of_scope };

inline std::string_view name(StoimenowVerdict v) {
  switch (v) {
    case StoimenowVerdict::adequate: return "adequate";
    case StoimenowVerdict::not_adequate: return "not_adequate";
    case StoimenowVerdict::out_of_scope: return "out_of_scope";
  }
  return "?";
}

struct StoimenowResult {
  StoimenowVerdict verdict = StoimenowVerdict::out_of_scope;
  std::string reason;

  bool adequate() const noexcept { return verdict == StoimenowVerdict::adequate; }
};

// A-adequacy classification of closed 3-braids with at least two syllables per generator.
// The forbidden cyclically induced s1^-1 s2^-1 s1^-1 is matched at letter level: a
// syllable of exponent exactly -1 whose two cyclic neighbours are both negative.
inline StoimenowResult stoimenow_A_adequate_3braid(const SyllableWord& word) {
  if (word.strands != 3) return {StoimenowVerdict::out_of_scope, "requires n = 3"};
  if (!word.cyclically_reduced) return {StoimenowVerdict::out_of_scope, "word is not cyclically reduced"};
  if (word.size() < 4) return {StoimenowVerdict::out_of_scope, "fewer than two syllables per generator"};

  const auto l = static_cast<std::ptrdiff_t>(word.size());
  bool positive = true;
  for (const auto& s : word.syllables) positive = positive && s.exp > 0;
  if (positive) return {StoimenowVerdict::adequate, "positive braid"};

  for (std::ptrdiff_t i = 0; i < l; ++i) {
    const Syllable& s = word.syllables[static_cast<std::size_t>(i)];
    const Syllable& prev = word.at_cyclic(i - 1);
    const Syllable& next = word.at_cyclic(i + 1);
    if (s.exp == -1 && prev.exp < 0 && next.exp < 0)
      return {StoimenowVerdict::not_adequate,
              "cyclically induced s1^-1 s2^-1 s1^-1 at syllable " + std::to_string(i)};
    if (s.exp > 0 && (prev.exp > 0 || next.exp > 0))
      return {StoimenowVerdict::not_adequate,
              "positive syllable " + std::to_string(i) + " not neighboured by negative syllables"};
  }
  return {StoimenowVerdict::adequate, "no forbidden subword; positive syllables isolated"};
}

}  // namespace braidvol
