#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidvol/all_a_state.hpp"
#include "braidvol/bounds.hpp"
#include "braidvol/braid_word.hpp"
#include "braidvol/hypotheses.hpp"

namespace braidvol {

// Working alphabet for B_3: x = (s1 s2 s1)^-1, y = s1 s2, with C = x^-2 = y^3 central.
enum class XY : std::uint8_t { x, y };

// Cyclic word in x, y together with the power of C collected so far.
struct XYWord {
  std::vector<XY> letters;
  int central_exponent = 0;

  bool operator==(const XYWord&) const = default;
};

enum class EtaPattern { alternating, xy_power, xy2_power, y, y2, x, one };

inline std::string_view name(EtaPattern p) {
  switch (p) {
    case EtaPattern::alternating: return "alternating";
    case EtaPattern::xy_power: return "(xy)^p";
    case EtaPattern::xy2_power: return "(xy^2)^q";
    case EtaPattern::y: return "y";
    case EtaPattern::y2: return "y^2";
    case EtaPattern::x: return "x";
    case EtaPattern::one: return "1";
  }
  return "?";
}

// C^j eta after exhaustive rewriting.
struct Eta {
  int j = 0;
  EtaPattern pattern = EtaPattern::one;
  std::vector<std::pair<int, int>> pairs;  // alternating: (xy)^p (xy^2)^q blocks
  int power = 0;                           // xy_power / xy2_power exponent
};

enum class EtaKind { Generic, PowerSigma1, Sigma12, Sigma1212, Sigma121, Empty };

inline std::string_view name(EtaKind k) {
  switch (k) {
    case EtaKind::Generic: return "Generic";
    case EtaKind::PowerSigma1: return "PowerSigma1";
    case EtaKind::Sigma12: return "Sigma12";
    case EtaKind::Sigma1212: return "Sigma1212";
    case EtaKind::Sigma121: return "Sigma121";
    case EtaKind::Empty: return "Empty";
  }
  return "?";
}

// C^k eta'. Generic: eta' = s1^-p1 s2^q1 ... s1^-ps s2^qs, pairs in least rotation.
struct SchreierForm {
  int k = 0;
  EtaKind kind = EtaKind::Empty;
  std::vector<std::pair<int, int>> pairs;
  int power = 0;  // PowerSigma1 exponent
  int s = 0;
  // eta was x or 1, whose images are not listed among the step (3) forms.
  bool degenerate_eta = false;

  bool operator==(const SchreierForm& o) const {
    return k == o.k && kind == o.kind && pairs == o.pairs && power == o.power;
  }
};

namespace detail {

inline void require_three_strands(int n, std::string_view op) {
  if (n != 3) throw std::invalid_argument(std::string(op) + ": requires n = 3, got n = " + std::to_string(n));
}

inline void append_letter_xy(std::vector<XY>& out, int g) {
  switch (g) {
    case 1: out.insert(out.end(), {XY::y, XY::y, XY::x}); break;
    case 2: out.insert(out.end(), {XY::x, XY::y, XY::y}); break;
    case -1: out.insert(out.end(), {XY::x, XY::y}); break;
    case -2: out.insert(out.end(), {XY::y, XY::x}); break;
    default: throw std::invalid_argument("not a 3-braid letter: " + std::to_string(g));
  }
}

template <typename T>
std::vector<T> least_rotation(const std::vector<T>& v) {
  std::vector<T> best = v;
  std::vector<T> cur = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace detail

// s1 -> y^2 x, s2 -> x y^2, s1^-1 -> x y, s2^-1 -> y x.
inline XYWord to_xy(const BraidWord& word) {
  detail::require_three_strands(word.strands, "to_xy");
  XYWord w;
  w.letters.reserve(word.letters.size() * 3);
  for (int g : word.letters) detail::append_letter_xy(w.letters, g);
  return w;
}

inline XYWord to_xy(const SyllableWord& word) {
  detail::require_three_strands(word.strands, "to_xy");
  return to_xy(expand(word));
}

// Exhaustive x x -> C^-1 and y y y -> C, including across the cyclic seam.
inline XYWord reduce_xy(const XYWord& in) {
  XYWord out;
  out.central_exponent = in.central_exponent;
  auto& st = out.letters;
  st.reserve(in.letters.size());
  for (XY c : in.letters) {
    st.push_back(c);
    const std::size_t sz = st.size();
    if (c == XY::x && sz >= 2 && st[sz - 2] == XY::x) {
      st.resize(sz - 2);
      --out.central_exponent;
    } else if (c == XY::y && sz >= 3 && st[sz - 2] == XY::y && st[sz - 3] == XY::y) {
      st.resize(sz - 3);
      ++out.central_exponent;
    }
  }
  // Seam: rotating is conjugation and C is central.
  std::size_t lo = 0;
  std::size_t hi = st.size();
  for (;;) {
    const std::size_t len = hi - lo;
    if (len < 2) break;
    if (st[lo] == XY::x && st[hi - 1] == XY::x) {
      ++lo;
      --hi;
      --out.central_exponent;
      continue;
    }
    std::size_t lead = 0;
    while (lo + lead < hi && st[lo + lead] == XY::y) ++lead;
    if (lead == len) break;  // y or y^2 only
    std::size_t trail = 0;
    while (trail < len && st[hi - 1 - trail] == XY::y) ++trail;
    if (lead + trail >= 3) {
      const std::size_t from_back = std::min<std::size_t>(trail, 3);
      hi -= from_back;
      lo += 3 - from_back;
      ++out.central_exponent;
      continue;
    }
    break;
  }
  out.letters = std::vector<XY>(st.begin() + static_cast<std::ptrdiff_t>(lo),
                                st.begin() + static_cast<std::ptrdiff_t>(hi));
  return out;
}

// Rewrites to C^j eta and identifies which step (2) pattern eta matches.
inline Eta normalize_xy(const XYWord& w) {
  const XYWord r = reduce_xy(w);
  Eta eta;
  eta.j = r.central_exponent;
  const auto& v = r.letters;
  const auto nx = std::count(v.begin(), v.end(), XY::x);
  if (v.empty()) {
    eta.pattern = EtaPattern::one;
    return eta;
  }
  if (nx == 0) {
    if (v.size() > 2) throw std::logic_error("normalize_xy: residual y-run of length " + std::to_string(v.size()));
    eta.pattern = v.size() == 1 ? EtaPattern::y : EtaPattern::y2;
    return eta;
  }
  if (v.size() == 1) {
    eta.pattern = EtaPattern::x;
    return eta;
  }
  // Rotate to start at an x; then blocks are x y^e with e in {1, 2}.
  const auto first_x = std::find(v.begin(), v.end(), XY::x);
  std::vector<XY> rot(first_x, v.end());
  rot.insert(rot.end(), v.begin(), first_x);
  std::vector<int> blocks;
  for (std::size_t i = 0; i < rot.size();) {
    if (rot[i] != XY::x) throw std::logic_error("normalize_xy: residual word is not alternating");
    std::size_t e = 0;
    ++i;
    while (i < rot.size() && rot[i] == XY::y) {
      ++e;
      ++i;
    }
    if (e < 1 || e > 2) throw std::logic_error("normalize_xy: residual word matches no eta pattern");
    blocks.push_back(static_cast<int>(e));
  }
  const auto ones = std::count(blocks.begin(), blocks.end(), 1);
  if (ones == static_cast<std::ptrdiff_t>(blocks.size())) {
    eta.pattern = EtaPattern::xy_power;
    eta.power = static_cast<int>(blocks.size());
    return eta;
  }
  if (ones == 0) {
    eta.pattern = EtaPattern::xy2_power;
    eta.power = static_cast<int>(blocks.size());
    return eta;
  }
  // Start at an (xy) block preceded cyclically by an (xy^2) block.
  std::size_t start = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == 1 && blocks[(i + blocks.size() - 1) % blocks.size()] == 2) {
      start = i;
      break;
    }
  }
  std::rotate(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(start), blocks.end());
  eta.pattern = EtaPattern::alternating;
  for (std::size_t i = 0; i < blocks.size();) {
    int p = 0;
    int q = 0;
    while (i < blocks.size() && blocks[i] == 1) ++p, ++i;
    while (i < blocks.size() && blocks[i] == 2) ++q, ++i;
    eta.pairs.emplace_back(p, q);
  }
  return eta;
}

// Maps C^j eta back to sigma form C^k eta'.
inline SchreierForm to_sigma_form(const Eta& eta) {
  SchreierForm f;
  f.k = eta.j;
  switch (eta.pattern) {
    case EtaPattern::alternating:
      f.kind = EtaKind::Generic;
      f.pairs = detail::least_rotation(eta.pairs);
      f.s = static_cast<int>(f.pairs.size());
      break;
    case EtaPattern::xy_power:
      f.kind = EtaKind::PowerSigma1;
      f.power = -eta.power;
      break;
    case EtaPattern::xy2_power:  // s2^q is conjugate to s1^q
      f.kind = EtaKind::PowerSigma1;
      f.power = eta.power;
      break;
    case EtaPattern::y: f.kind = EtaKind::Sigma12; break;
    case EtaPattern::y2: f.kind = EtaKind::Sigma1212; break;
    case EtaPattern::x:  // x = C^-1 s1 s2 s1
      f.kind = EtaKind::Sigma121;
      f.k = eta.j - 1;
      f.degenerate_eta = true;
      break;
    case EtaPattern::one:
      f.kind = EtaKind::Empty;
      f.degenerate_eta = true;
      break;
  }
  return f;
}

inline SchreierForm schreier_normal_form(const BraidWord& word) {
  detail::require_three_strands(word.strands, "schreier_normal_form");
  return to_sigma_form(normalize_xy(to_xy(word)));
}

inline SchreierForm schreier_normal_form(const SyllableWord& word) {
  detail::require_three_strands(word.strands, "schreier_normal_form");
  return schreier_normal_form(expand(word));
}

inline bool is_generic(const SchreierForm& f) noexcept { return f.kind == EtaKind::Generic; }

// Letter expansion of C^k eta', with C = (s1 s2)^3.
inline BraidWord to_letters(const SchreierForm& f) {
  BraidWord w{3, {}};
  auto push = [&](int g, int times) {
    for (int i = 0; i < times; ++i) w.letters.push_back(g);
  };
  for (int i = 0; i < std::abs(f.k); ++i) {
    if (f.k > 0)
      w.letters.insert(w.letters.end(), {1, 2, 1, 2, 1, 2});
    else
      w.letters.insert(w.letters.end(), {-2, -1, -2, -1, -2, -1});
  }
  switch (f.kind) {
    case EtaKind::Generic:
      for (auto [p, q] : f.pairs) {
        push(-1, p);
        push(2, q);
      }
      break;
    case EtaKind::PowerSigma1: push(f.power > 0 ? 1 : -1, std::abs(f.power)); break;
    case EtaKind::Sigma12: w.letters.insert(w.letters.end(), {1, 2}); break;
    case EtaKind::Sigma1212: w.letters.insert(w.letters.end(), {1, 2, 1, 2}); break;
    case EtaKind::Sigma121: w.letters.insert(w.letters.end(), {1, 2, 1}); break;
    case EtaKind::Empty: break;
  }
  return w;
}

inline std::string to_string(const SchreierForm& f) {
  std::string out = "C^" + std::to_string(f.k);
  auto syl = [](int g, int e) { return " s" + std::to_string(g) + (e == 1 ? "" : "^" + std::to_string(e)); };
  switch (f.kind) {
    case EtaKind::Generic:
      for (auto [p, q] : f.pairs) out += syl(1, -p) + syl(2, q);
      break;
    case EtaKind::PowerSigma1: out += syl(1, f.power); break;
    case EtaKind::Sigma12: out += " s1 s2"; break;
    case EtaKind::Sigma1212: out += " s1 s2 s1 s2"; break;
    case EtaKind::Sigma121: out += " s1 s2 s1"; break;
    case EtaKind::Empty: break;
  }
  return out;
}

inline bool conjugate_3braids(const BraidWord& a, const BraidWord& b) {
  detail::require_three_strands(a.strands, "conjugate_3braids");
  detail::require_three_strands(b.strands, "conjugate_3braids");
  return schreier_normal_form(a) == schreier_normal_form(b);
}

inline bool conjugate_3braids(const SyllableWord& a, const SyllableWord& b) {
  return conjugate_3braids(expand(a), expand(b));
}

namespace detail {

inline void require_gate(const SyllableWord& word, std::string_view op) {
  require_three_strands(word.strands, op);
  if (!check_main_lemma(word).pass) throw GateError(std::string(op) + ": main lemma conditions fail");
}

}  // namespace detail

// k = -#{cyclic s2^a s1^b products of negative syllables, a, b <= -3}.
inline int direct_read_k(const SyllableWord& word) {
  detail::require_gate(word, "direct_read_k");
  const auto l = static_cast<std::ptrdiff_t>(word.size());
  int count = 0;
  for (std::ptrdiff_t i = 0; i < l; ++i) {
    const Syllable& a = word.at_cyclic(i);
    const Syllable& b = word.at_cyclic(i + 1);
    if (a.gen == 2 && a.exp <= -3 && b.gen == 1 && b.exp <= -3) ++count;
  }
  return -count;
}

inline int direct_read_s(const SyllableWord& word) {
  detail::require_gate(word, "direct_read_s");
  return twist_counts(word).t_minus;
}

struct HyperbolicityVerdict {
  bool hyperbolic = false;
  std::string reason;
  std::optional<std::pair<int, int>> witness;  // (p, q) with the braid conjugate to s1^p s2^q
};

inline int conjugacy_search_bound(const SchreierForm& f, int exponent_sum) {
  int mass = 0;
  for (auto [p, q] : f.pairs) mass += p + q;
  return std::abs(exponent_sum) + 6 * (std::abs(f.k) + f.s + mass) + 12;
}

// Hyperbolic iff generic and not conjugate to any s1^p s2^q.
inline HyperbolicityVerdict is_hyperbolic_closure_3braid(const BraidWord& word) {
  detail::require_three_strands(word.strands, "is_hyperbolic_closure_3braid");
  const SchreierForm f = schreier_normal_form(word);
  if (!is_generic(f)) return {false, "non-generic", std::nullopt};
  const int e = exponent_sum(word);
  const int bound = conjugacy_search_bound(f, e);
  for (int p = -bound; p <= bound; ++p) {
    const int q = e - p;
    BraidWord cand{3, {}};
    cand.letters.assign(static_cast<std::size_t>(std::abs(p)), p > 0 ? 1 : -1);
    cand.letters.insert(cand.letters.end(), static_cast<std::size_t>(std::abs(q)), q > 0 ? 2 : -2);
    if (schreier_normal_form(cand) == f)
      return {false, "conjugate to s1^p s2^q", std::pair{p, q}};
  }
  return {true, "generic and not conjugate to s1^p s2^q", std::nullopt};
}

inline HyperbolicityVerdict is_hyperbolic_closure_3braid(const SyllableWord& word) {
  detail::require_three_strands(word.strands, "is_hyperbolic_closure_3braid");
  return is_hyperbolic_closure_3braid(expand(word));
}

}  // namespace braidvol
