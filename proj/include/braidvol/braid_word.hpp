#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace braidvol {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A word in the n-strand braid group. Letter +i is sigma_i, -i its inverse.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// sigma_gen^exp
struct Syllable {
  int gen = 1;
  int exp = 1;

  bool operator==(const Syllable&) const = default;
};

struct SyllableWord {
  int strands = 1;
  std::vector<Syllable> syllables;
  bool cyclically_reduced = false;
  // Letters of the freely reduced word moved from the back to the front.
  std::size_t rotation = 0;

  std::size_t size() const noexcept { return syllables.size(); }
  bool empty() const noexcept { return syllables.empty(); }

  // Cyclic neighbour, offset may be negative.
  const Syllable& at_cyclic(std::ptrdiff_t i) const {
    const auto l = static_cast<std::ptrdiff_t>(syllables.size());
    return syllables[static_cast<std::size_t>(((i % l) + l) % l)];
  }

  bool operator==(const SyllableWord& o) const {
    return strands == o.strands && syllables == o.syllables;
  }
};

inline void validate(const BraidWord& w) {
  if (w.strands < 1)
    throw ParseError("strand count must be at least 1, got " + std::to_string(w.strands));
  for (int g : w.letters)
    if (g == 0 || std::abs(g) > w.strands - 1)
      throw ParseError("generator index " + std::to_string(std::abs(g)) + " out of range for n=" +
                       std::to_string(w.strands));
}

namespace detail {

inline std::optional<long long> parse_int(std::string_view s, bool allow_sign) {
  if (s.empty()) return std::nullopt;
  bool neg = false;
  if (s.front() == '-') {
    if (!allow_sign) return std::nullopt;
    neg = true;
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  if (v > 1'000'000) return std::nullopt;
  return neg ? -v : v;
}

}  // namespace detail

// WORD := TOKEN (WS TOKEN)* ; TOKEN := SIGNED_INT | [sS] UINT ("^" SIGNED_INT)?
inline BraidWord parse_braid(std::string_view text, std::optional<int> n = std::nullopt) {
  BraidWord w;
  int max_gen = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;

    long long gen = 0;
    long long power = 1;
    if (tok.front() == 's' || tok.front() == 'S') {
      const auto body = tok.substr(1);
      const auto caret = body.find('^');
      const auto idx = detail::parse_int(body.substr(0, caret), false);
      if (!idx) throw ParseError("malformed token '" + std::string(tok) + "'");
      gen = *idx;
      if (caret != std::string_view::npos) {
        const auto e = detail::parse_int(body.substr(caret + 1), true);
        if (!e) throw ParseError("malformed exponent in token '" + std::string(tok) + "'");
        power = *e;
      }
    } else {
      const auto v = detail::parse_int(tok, true);
      if (!v) throw ParseError("malformed token '" + std::string(tok) + "'");
      gen = std::llabs(*v);
      power = *v < 0 ? -1 : 1;
    }
    if (gen < 1) throw ParseError("generator index must be positive in token '" + std::string(tok) + "'");
    max_gen = std::max<int>(max_gen, static_cast<int>(gen));
    const int letter = power < 0 ? -static_cast<int>(gen) : static_cast<int>(gen);
    for (long long k = 0; k < std::llabs(power); ++k) w.letters.push_back(letter);
  }
  w.strands = n ? *n : max_gen + 1;
  validate(w);
  return w;
}

inline BraidWord mirror(const BraidWord& w) {
  BraidWord m = w;
  for (int& g : m.letters) g = -g;
  return m;
}

inline SyllableWord mirror(const SyllableWord& w) {
  SyllableWord m = w;
  for (auto& s : m.syllables) s.exp = -s.exp;
  return m;
}

inline int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int g : w.letters) e += g > 0 ? 1 : -1;
  return e;
}

inline int exponent_sum(const SyllableWord& w) {
  int e = 0;
  for (const auto& s : w.syllables) e += s.exp;
  return e;
}

inline std::size_t crossing_count(const SyllableWord& w) {
  std::size_t c = 0;
  for (const auto& s : w.syllables) c += static_cast<std::size_t>(std::abs(s.exp));
  return c;
}

inline BraidWord expand(const SyllableWord& w) {
  BraidWord b{w.strands, {}};
  for (const auto& s : w.syllables)
    for (int k = 0; k < std::abs(s.exp); ++k) b.letters.push_back(s.exp > 0 ? s.gen : -s.gen);
  return b;
}

// Free reduction, seam cancellation, then run merging (with a seam merge by
// rotation). Output is conjugate to the input.
inline SyllableWord cyclically_reduce_into_syllables(const BraidWord& word) {
  validate(word);
  std::vector<int> stack;
  stack.reserve(word.letters.size());
  for (int g : word.letters) {
    if (!stack.empty() && stack.back() == -g)
      stack.pop_back();
    else
      stack.push_back(g);
  }
  std::size_t lo = 0;
  std::size_t hi = stack.size();
  while (hi - lo >= 2 && stack[lo] == -stack[hi - 1]) {
    ++lo;
    --hi;
  }

  SyllableWord out;
  out.strands = word.strands;
  out.cyclically_reduced = true;
  for (std::size_t i = lo; i < hi; ++i) {
    const int g = stack[i];
    const int gen = std::abs(g);
    const int sgn = g > 0 ? 1 : -1;
    if (!out.syllables.empty() && out.syllables.back().gen == gen)
      out.syllables.back().exp += sgn;
    else
      out.syllables.push_back({gen, sgn});
  }
  if (out.syllables.size() >= 2 && out.syllables.front().gen == out.syllables.back().gen) {
    const Syllable last = out.syllables.back();
    out.syllables.pop_back();
    out.syllables.front().exp += last.exp;
    out.rotation = static_cast<std::size_t>(std::abs(last.exp));
  }
  return out;
}

// Window of syllable indices [begin, end).
struct SyllableRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SyllableRange&) const = default;
};

struct CompleteSubwordWitness {
  bool found = false;
  std::optional<std::pair<SyllableRange, SyllableRange>> windows;
  // Linear search failed but some cyclic rotation of the word has a pair.
  bool cyclic_only = false;
};

namespace detail {

// Shortest prefix of syllables [from, to) covering generators 1..n-1; returns end index.
inline std::optional<std::size_t> covering_prefix_end(const std::vector<Syllable>& s, std::size_t from,
                                                      std::size_t to, int strands) {
  const int need = strands - 1;
  if (need <= 0) return std::nullopt;
  std::vector<char> seen(static_cast<std::size_t>(strands), 0);
  int have = 0;
  for (std::size_t i = from; i < to; ++i) {
    const int g = s[i].gen;
    if (!seen[static_cast<std::size_t>(g)]) {
      seen[static_cast<std::size_t>(g)] = 1;
      if (++have == need) return i + 1;
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<SyllableRange, SyllableRange>> linear_complete_pair(
    const std::vector<Syllable>& s, int strands) {
  const auto first_end = covering_prefix_end(s, 0, s.size(), strands);
  if (!first_end) return std::nullopt;
  const auto second_end = covering_prefix_end(s, *first_end, s.size(), strands);
  if (!second_end) return std::nullopt;
  return std::pair{SyllableRange{0, *first_end}, SyllableRange{*first_end, *second_end}};
}

}  // namespace detail

// Two syllable-disjoint contiguous windows of the linear word, each containing
// every generator. The greedy shortest first window is optimal.
inline CompleteSubwordWitness has_disjoint_complete_subwords(const SyllableWord& word) {
  CompleteSubwordWitness r;
  if (word.empty()) return r;
  if (auto p = detail::linear_complete_pair(word.syllables, word.strands)) {
    r.found = true;
    r.windows = p;
    return r;
  }
  std::vector<Syllable> rot = word.syllables;
  for (std::size_t k = 1; k < rot.size(); ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (detail::linear_complete_pair(rot, word.strands)) {
      r.cyclic_only = true;
      break;
    }
  }
  return r;
}

inline bool is_nice(const SyllableWord& word) {
  return word.cyclically_reduced && has_disjoint_complete_subwords(word).found;
}

inline std::string to_string(const SyllableWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.syllables.size(); ++i) {
    if (i) os << ' ';
    os << 's' << w.syllables[i].gen;
    if (w.syllables[i].exp != 1) os << '^' << w.syllables[i].exp;
  }
  return os.str();
}

inline std::string to_string(const BraidWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) os << ' ';
    os << w.letters[i];
  }
  return os.str();
}

inline SyllableWord parse_syllables(std::string_view text, std::optional<int> n = std::nullopt) {
  return cyclically_reduce_into_syllables(parse_braid(text, n));
}

// Builds a syllable word verbatim; cyclically_reduced is computed, not assumed.
inline SyllableWord make_syllable_word(int strands, std::vector<Syllable> syllables) {
  SyllableWord w;
  w.strands = strands;
  w.syllables = std::move(syllables);
  bool ok = true;
  const std::size_t l = w.syllables.size();
  for (std::size_t i = 0; i < l; ++i) {
    const auto& s = w.syllables[i];
    if (s.exp == 0 || s.gen < 1 || s.gen > strands - 1)
      throw ParseError("invalid syllable s" + std::to_string(s.gen) + "^" + std::to_string(s.exp));
    if (l >= 2 && s.gen == w.syllables[(i + 1) % l].gen) ok = false;
  }
  w.cyclically_reduced = ok;
  return w;
}

}  // namespace braidvol
