#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidvol/braid_word.hpp"

namespace braidvol {

// Diagram layout: letter l acts between level l and level l+1; point (level, pos)
// sits on strand position pos (1..n) at that level. Closure arcs join (L, pos) to (0, pos).

enum class ArcKind { pass, cap, cup, closure };

struct Arc {
  int id = 0;
  ArcKind kind = ArcKind::pass;
  int column = 0;  // generator index for cap/cup, strand position otherwise
  int level = 0;   // letter index; closure arcs use the letter count
  int from = 0;    // point ids
  int to = 0;
};

enum class SegmentOrientation { horizontal, vertical };

struct Segment {
  int crossing = 0;
  int syllable = 0;
  int column = 0;
  SegmentOrientation orientation = SegmentOrientation::horizontal;
  int circle_a = -1;
  int circle_b = -1;

  bool is_loop() const noexcept { return circle_a == circle_b; }
};

enum class CircleClass {
  small_inner,
  medium_inner,
  essential_wandering,
  nonessential_wandering,
  nonwandering,
  unclassified,
};

inline constexpr std::array<CircleClass, 6> all_circle_classes{
    CircleClass::small_inner,         CircleClass::medium_inner, CircleClass::essential_wandering,
    CircleClass::nonessential_wandering, CircleClass::nonwandering, CircleClass::unclassified};

inline std::string_view name(CircleClass c) {
  switch (c) {
    case CircleClass::small_inner: return "SmallInner";
    case CircleClass::medium_inner: return "MediumInner";
    case CircleClass::essential_wandering: return "EssentialWandering";
    case CircleClass::nonessential_wandering: return "NonEssentialWandering";
    case CircleClass::nonwandering: return "Nonwandering";
    case CircleClass::unclassified: return "Unclassified";
  }
  return "?";
}

struct StateCircle {
  int id = 0;
  std::vector<int> arcs;     // in traversal order
  int winding = 0;           // |signed closure-arc traversals|
  std::vector<int> support;  // sorted generator columns with a cap or cup on this circle
  std::vector<int> segments; // incident segment ids (loops listed once)
  CircleClass klass = CircleClass::unclassified;
};

struct AllAState {
  SyllableWord word;
  int levels = 0;  // letter count
  std::vector<Arc> arcs;
  std::vector<StateCircle> circles;
  std::vector<Segment> segments;
  std::vector<int> point_circle;
  bool classified = false;

  int strands() const noexcept { return word.strands; }
  int crossings() const noexcept { return levels; }
  int point(int level, int pos) const noexcept { return level * word.strands + (pos - 1); }

  std::size_t count(CircleClass c) const {
    return static_cast<std::size_t>(
        std::count_if(circles.begin(), circles.end(), [c](const auto& k) { return k.klass == c; }));
  }
  // Non-essential wandering circles.
  std::size_t m() const { return count(CircleClass::nonessential_wandering); }
  bool classification_total() const { return classified && count(CircleClass::unclassified) == 0; }
};

inline AllAState resolve_all_A(const SyllableWord& word) {
  AllAState st;
  st.word = word;
  const int n = word.strands;
  const BraidWord letters = expand(word);
  const int L = static_cast<int>(letters.letters.size());
  st.levels = L;

  std::vector<int> syllable_of;
  syllable_of.reserve(static_cast<std::size_t>(L));
  for (std::size_t s = 0; s < word.syllables.size(); ++s)
    for (int k = 0; k < std::abs(word.syllables[s].exp); ++k) syllable_of.push_back(static_cast<int>(s));

  auto add_arc = [&](ArcKind kind, int column, int level, int from, int to) {
    st.arcs.push_back({static_cast<int>(st.arcs.size()), kind, column, level, from, to});
  };
  for (int l = 0; l < L; ++l) {
    const int g = letters.letters[static_cast<std::size_t>(l)];
    const int i = std::abs(g);
    for (int pos = 1; pos <= n; ++pos) {
      if (g < 0 && (pos == i || pos == i + 1)) continue;
      add_arc(ArcKind::pass, pos, l, st.point(l, pos), st.point(l + 1, pos));
    }
    if (g < 0) {
      add_arc(ArcKind::cap, i, l, st.point(l, i), st.point(l, i + 1));
      add_arc(ArcKind::cup, i, l, st.point(l + 1, i), st.point(l + 1, i + 1));
    }
  }
  for (int pos = 1; pos <= n; ++pos) add_arc(ArcKind::closure, pos, L, st.point(L, pos), st.point(0, pos));

  // Each point carries exactly two arc ends.
  const int npoints = (L + 1) * n;
  std::vector<std::array<int, 2>> ends(static_cast<std::size_t>(npoints), {-1, -1});
  auto attach = [&](int p, int arc) {
    auto& e = ends[static_cast<std::size_t>(p)];
    if (e[0] < 0)
      e[0] = arc;
    else if (e[1] < 0)
      e[1] = arc;
    else
      throw std::logic_error("point of degree > 2 in all-A state");
  };
  for (const auto& a : st.arcs) {
    attach(a.from, a.id);
    attach(a.to, a.id);
  }

  st.point_circle.assign(static_cast<std::size_t>(npoints), -1);
  std::vector<char> used(st.arcs.size(), 0);
  for (const auto& start : st.arcs) {
    if (used[static_cast<std::size_t>(start.id)]) continue;
    StateCircle c;
    c.id = static_cast<int>(st.circles.size());
    int signed_turns = 0;
    std::set<int> support;
    int arc = start.id;
    int at = start.from;
    while (!used[static_cast<std::size_t>(arc)]) {
      used[static_cast<std::size_t>(arc)] = 1;
      const Arc& a = st.arcs[static_cast<std::size_t>(arc)];
      c.arcs.push_back(arc);
      const int next_point = (a.from == at) ? a.to : a.from;
      if (a.kind == ArcKind::closure) signed_turns += (at == a.from) ? 1 : -1;  // bottom->top = +1
      if (a.kind == ArcKind::cap || a.kind == ArcKind::cup) support.insert(a.column);
      st.point_circle[static_cast<std::size_t>(at)] = c.id;
      st.point_circle[static_cast<std::size_t>(next_point)] = c.id;
      const auto& e = ends[static_cast<std::size_t>(next_point)];
      const int other = (e[0] == arc) ? e[1] : e[0];
      at = next_point;
      arc = other;
    }
    c.winding = std::abs(signed_turns);
    c.support.assign(support.begin(), support.end());
    st.circles.push_back(std::move(c));
  }

  for (int l = 0; l < L; ++l) {
    const int g = letters.letters[static_cast<std::size_t>(l)];
    const int i = std::abs(g);
    Segment s;
    s.crossing = l;
    s.syllable = syllable_of[static_cast<std::size_t>(l)];
    s.column = i;
    if (g > 0) {
      s.orientation = SegmentOrientation::horizontal;
      s.circle_a = st.point_circle[static_cast<std::size_t>(st.point(l, i))];
      s.circle_b = st.point_circle[static_cast<std::size_t>(st.point(l, i + 1))];
    } else {
      s.orientation = SegmentOrientation::vertical;
      s.circle_a = st.point_circle[static_cast<std::size_t>(st.point(l, i))];      // cap side
      s.circle_b = st.point_circle[static_cast<std::size_t>(st.point(l + 1, i))];  // cup side
    }
    st.segments.push_back(s);
    st.circles[static_cast<std::size_t>(s.circle_a)].segments.push_back(l);
    if (!s.is_loop()) st.circles[static_cast<std::size_t>(s.circle_b)].segments.push_back(l);
  }
  return st;
}

namespace detail {

inline bool is_small_inner_pattern(const AllAState& st, const StateCircle& c) {
  if (c.segments.size() != 2) return false;
  const auto& s1 = st.segments[static_cast<std::size_t>(c.segments[0])];
  const auto& s2 = st.segments[static_cast<std::size_t>(c.segments[1])];
  if (s1.orientation != SegmentOrientation::vertical || s2.orientation != SegmentOrientation::vertical)
    return false;
  if (s1.syllable != s2.syllable) return false;
  const int gap = std::abs(s1.crossing - s2.crossing);
  if (gap == 1) return true;
  // A single syllable wraps around the closure.
  return st.word.size() == 1 && gap == st.levels - 1;
}

}  // namespace detail

inline AllAState classify_circles(AllAState st) {
  for (auto& c : st.circles) {
    if (c.support.empty())
      c.klass = CircleClass::nonwandering;
    else if (c.support.size() >= 2)
      c.klass = c.winding == 1 ? CircleClass::essential_wandering : CircleClass::nonessential_wandering;
    else if (detail::is_small_inner_pattern(st, c))
      c.klass = CircleClass::small_inner;
    else if (c.winding == 0)
      c.klass = CircleClass::medium_inner;
    else
      c.klass = CircleClass::unclassified;
  }
  st.classified = true;
  return st;
}

inline AllAState analyze_state(const SyllableWord& word) { return classify_circles(resolve_all_A(word)); }

inline bool is_A_adequate(const AllAState& st) {
  return std::none_of(st.segments.begin(), st.segments.end(), [](const Segment& s) { return s.is_loop(); });
}

namespace detail {
inline std::pair<int, int> endpoint_key(const Segment& s) {
  return {std::min(s.circle_a, s.circle_b), std::max(s.circle_a, s.circle_b)};
}
}  // namespace detail

// Any circle pair sharing two or more segments must share them through a
// single positive syllable of length >= 2 (a short twist region).
inline bool satisfies_TELC(const AllAState& st, const SyllableWord& word) {
  std::map<std::pair<int, int>, std::vector<int>> groups;
  for (const auto& s : st.segments) groups[detail::endpoint_key(s)].push_back(s.syllable);
  for (const auto& [key, syl] : groups) {
    if (syl.size() < 2) continue;
    if (std::any_of(syl.begin(), syl.end(), [&](int x) { return x != syl.front(); })) return false;
    if (word.syllables[static_cast<std::size_t>(syl.front())].exp < 2) return false;
  }
  return true;
}

struct TwistCounts {
  int t = 0;
  int t_plus = 0;
  int t_minus = 0;

  bool operator==(const TwistCounts&) const = default;
};

inline TwistCounts twist_counts(const SyllableWord& word) {
  TwistCounts tc;
  for (const auto& s : word.syllables) (s.exp > 0 ? tc.t_plus : tc.t_minus)++;
  tc.t = tc.t_plus + tc.t_minus;
  return tc;
}

// False when two cyclically consecutive syllables in generator i are separated only by
// generators commuting with s_i; their crossings then share a twist region.
inline bool syllables_are_twist_regions(const SyllableWord& word) {
  const auto l = static_cast<std::ptrdiff_t>(word.size());
  for (std::ptrdiff_t i = 0; i < l; ++i) {
    const int g = word.syllables[static_cast<std::size_t>(i)].gen;
    for (std::ptrdiff_t d = 1; d <= l; ++d) {
      const int h = word.at_cyclic(i + d).gen;
      if (std::abs(h - g) == 1) break;
      if (h == g) return l == 1 && d == l;
    }
  }
  return true;
}

inline bool is_connected_closure(const SyllableWord& word) {
  std::vector<char> seen(static_cast<std::size_t>(std::max(word.strands, 1)), 0);
  for (const auto& s : word.syllables) seen[static_cast<std::size_t>(s.gen)] = 1;
  for (int g = 1; g <= word.strands - 1; ++g)
    if (!seen[static_cast<std::size_t>(g)]) return false;
  return true;
}

struct ReducedStateGraph {
  int v = 0;
  int e = 0;
  int unreduced_edges = 0;
  int neg_chi = 0;
};

// Loops are kept and counted as edges; callers gate on adequacy.
inline ReducedStateGraph reduced_graph(const AllAState& st) {
  std::set<std::pair<int, int>> edges;
  for (const auto& s : st.segments) edges.insert(detail::endpoint_key(s));
  ReducedStateGraph g;
  g.v = static_cast<int>(st.circles.size());
  g.e = static_cast<int>(edges.size());
  g.unreduced_edges = static_cast<int>(st.segments.size());
  g.neg_chi = g.e - g.v;
  return g;
}

enum class OcIdentityStatus { holds, fails, precondition_unmet };

inline std::string_view name(OcIdentityStatus s) {
  switch (s) {
    case OcIdentityStatus::holds: return "holds";
    case OcIdentityStatus::fails: return "fails";
    case OcIdentityStatus::precondition_unmet: return "precondition_unmet";
  }
  return "?";
}

// -chi(G'_A) = t(D) - #(circles that are not small inner).
inline OcIdentityStatus check_oc_identity(const AllAState& st, const SyllableWord& word) {
  if (!st.classification_total() || !is_connected_closure(word) || !is_A_adequate(st) ||
      !satisfies_TELC(st, word))
    return OcIdentityStatus::precondition_unmet;
  const int other = static_cast<int>(st.circles.size() - st.count(CircleClass::small_inner));
  const int t = twist_counts(word).t;
  return reduced_graph(st).neg_chi == t - other ? OcIdentityStatus::holds : OcIdentityStatus::fails;
}

}  // namespace braidvol
