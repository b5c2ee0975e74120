#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "braidvol/all_a_state.hpp"

namespace braidvol {

namespace detail {

struct SvgLayout {
  static constexpr int pitch_x = 40;
  static constexpr int pitch_y = 50;
  static constexpr int nest = 10;
  static constexpr int radius = pitch_x / 2;
  int n = 1;
  int levels = 0;
  int margin = 0;

  explicit SvgLayout(const AllAState& st)
      : n(st.strands()), levels(st.levels), margin(20 + (st.strands() + 1) * nest) {}

  int x(int pos) const { return margin + (pos - 1) * pitch_x; }
  int y(int level) const { return margin + level * pitch_y; }
  int width() const { return x(n) + (n + 1) * nest + 20; }
  int height() const { return y(levels) + margin; }
};

inline std::string_view circle_color(CircleClass c) {
  switch (c) {
    case CircleClass::small_inner: return "#1f77b4";
    case CircleClass::medium_inner: return "#2ca02c";
    case CircleClass::essential_wandering: return "#d62728";
    case CircleClass::nonessential_wandering: return "#ff7f0e";
    case CircleClass::nonwandering: return "#9467bd";
    case CircleClass::unclassified: return "#7f7f7f";
  }
  return "#000000";
}

// Path commands from point `at` along arc a to its other end.
inline void append_arc(std::ostringstream& os, const AllAState& st, const SvgLayout& g, const Arc& a, int at) {
  const int n = st.strands();
  auto px = [&](int p) { return g.x(p % n + 1); };
  auto py = [&](int p) { return g.y(p / n); };
  const int to = a.from == at ? a.to : a.from;
  const bool forward = a.from == at;
  switch (a.kind) {
    case ArcKind::pass:
      os << " L" << px(to) << ' ' << py(to);
      break;
    case ArcKind::cap:
    case ArcKind::cup: {
      const bool left_to_right = px(to) > px(at);
      const bool bulge_down = a.kind == ArcKind::cap;
      const int sweep = (left_to_right != bulge_down) ? 1 : 0;
      os << " A" << g.radius << ' ' << g.radius << " 0 0 " << sweep << ' ' << px(to) << ' ' << py(to);
      break;
    }
    case ArcKind::closure: {
      const int pos = a.column;
      const int d = (n - pos + 1) * g.nest;
      const int xr = g.x(n) + d;
      const int yb = g.y(g.levels) + d;
      const int yt = g.y(0) - d;
      if (forward)
        os << " L" << g.x(pos) << ' ' << yb << " L" << xr << ' ' << yb << " L" << xr << ' ' << yt << " L"
           << g.x(pos) << ' ' << yt << " L" << g.x(pos) << ' ' << g.y(0);
      else
        os << " L" << g.x(pos) << ' ' << yt << " L" << xr << ' ' << yt << " L" << xr << ' ' << yb << " L"
           << g.x(pos) << ' ' << yb << " L" << g.x(pos) << ' ' << g.y(g.levels);
      break;
    }
  }
}

}  // namespace detail

// One closed path per state circle, one dashed line per segment.
inline std::string render_state_svg(const AllAState& st) {
  const detail::SvgLayout g(st);
  const int n = st.strands();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << g.width() << "\" height=\"" << g.height()
     << "\" viewBox=\"0 0 " << g.width() << ' ' << g.height() << "\">\n";
  os << "<title>all-A state of " << to_string(st.word) << "</title>\n";
  os << "<g fill=\"none\" stroke-width=\"2\">\n";
  for (const auto& c : st.circles) {
    const Arc& first = st.arcs[static_cast<std::size_t>(c.arcs.front())];
    int at = first.from;
    os << "<path id=\"circle-" << c.id << "\" class=\"" << name(c.klass) << "\" stroke=\""
       << detail::circle_color(c.klass) << "\" d=\"M" << g.x(at % n + 1) << ' ' << g.y(at / n);
    for (int id : c.arcs) {
      const Arc& a = st.arcs[static_cast<std::size_t>(id)];
      detail::append_arc(os, st, g, a, at);
      at = a.from == at ? a.to : a.from;
    }
    os << " Z\"/>\n";
  }
  os << "</g>\n<g stroke=\"#000000\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
  for (const auto& s : st.segments) {
    const int l = s.crossing;
    os << "<line id=\"segment-" << l << "\" ";
    if (s.orientation == SegmentOrientation::vertical) {
      const int x = (g.x(s.column) + g.x(s.column + 1)) / 2;
      os << "x1=\"" << x << "\" y1=\"" << g.y(l) + g.radius << "\" x2=\"" << x << "\" y2=\""
         << g.y(l + 1) - g.radius << "\"";
    } else {
      const int y = (g.y(l) + g.y(l + 1)) / 2;
      os << "x1=\"" << g.x(s.column) << "\" y1=\"" << y << "\" x2=\"" << g.x(s.column + 1) << "\" y2=\"" << y
         << "\"";
    }
    os << "/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace braidvol
