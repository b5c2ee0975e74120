#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"

#include "braidvol/all_a_state.hpp"
#include "braidvol/bounds.hpp"
#include "braidvol/braid_word.hpp"
#include "braidvol/hypotheses.hpp"
#include "braidvol/jones_oracle.hpp"
#include "braidvol/schreier.hpp"

namespace braidvol {

inline constexpr const char* report_schema = "braidvol.report/1";

struct AnalysisOptions {
  bool bracket = false;
  bool require_jones = false;
  std::size_t max_crossings = default_max_crossings;
  bool unsafe_assume_prime = false;
  unsigned threads = 0;
};

struct SchreierBlock {
  SchreierForm form;
  HyperbolicityVerdict hyperbolicity;
  std::optional<int> direct_k;
  std::optional<int> direct_s;
};

struct BracketBlock {
  LaurentPolynomial polynomial;
  std::optional<BracketSummary> summary;  // A-adequate diagrams only
};

struct AnalysisReport {
  std::string input;
  SyllableWord word;
  TwistCounts twist;
  std::size_t crossings = 0;
  AllAState state;
  ReducedStateGraph graph;
  bool A_adequate = false;
  bool TELC = false;
  bool connected = false;
  bool twist_regions_separated = false;
  OcIdentityStatus oc_identity = OcIdentityStatus::precondition_unmet;
  MainLemmaReport main_lemma;
  std::optional<StoimenowResult> stoimenow;
  std::optional<VolumeBounds> bounds;
  std::optional<std::string> bounds_error;
  std::optional<VolumeBounds> jones_bounds;
  std::optional<SchreierBlock> schreier;
  std::optional<SBounds> s_bounds;
  std::optional<std::pair<int, int>> turaev;
  std::optional<BracketBlock> bracket;
};

inline BracketBlock compute_bracket(const SyllableWord& word, const AllAState& state, std::size_t max_crossings,
                                    unsigned threads = 0) {
  BracketBlock b;
  if (is_A_adequate(state)) {
    b.summary = stable_penultimate_coefficient(word, max_crossings, threads);
    b.polynomial = b.summary->bracket;
  } else {
    b.polynomial = kauffman_bracket(word, max_crossings, threads);
  }
  return b;
}

// Throws ParseError on bad text, GateError / CrossingCapExceeded when an explicitly
// requested analysis is unavailable.
inline AnalysisReport analyze(std::string_view text, std::optional<int> n, const AnalysisOptions& opts = {}) {
  AnalysisReport r;
  r.input = std::string(text);
  r.word = cyclically_reduce_into_syllables(parse_braid(text, n));
  const SyllableWord& w = r.word;
  r.twist = twist_counts(w);
  r.crossings = crossing_count(w);
  r.state = analyze_state(w);
  r.graph = reduced_graph(r.state);
  r.A_adequate = is_A_adequate(r.state);
  r.TELC = satisfies_TELC(r.state, w);
  r.connected = is_connected_closure(w);
  r.twist_regions_separated = syllables_are_twist_regions(w);
  r.oc_identity = check_oc_identity(r.state, w);
  r.main_lemma = check_main_lemma(w);
  const bool three = w.strands == 3;
  if (three) r.stoimenow = stoimenow_A_adequate_3braid(w);

  if (r.main_lemma.pass) {
    try {
      r.bounds = volume_bounds(w, r.state, r.graph, r.main_lemma);
    } catch (const std::exception& e) {
      r.bounds_error = e.what();
    }
    if (three || positives_only_in_boundary_generators(w))
      r.jones_bounds = jones_bounds(w, r.state, r.graph, r.main_lemma);
  } else if (opts.unsafe_assume_prime && r.A_adequate && r.TELC && r.connected && r.twist.t >= 2) {
    r.bounds = cor_bounds(r.graph.neg_chi, r.twist.t, BoundGate::assume("--unsafe-assume-prime"));
  }
  if (opts.require_jones && !r.jones_bounds)
    throw GateError(r.main_lemma.pass ? "jones bounds: positive syllables in interior generators"
                                      : "jones bounds: main lemma conditions fail");

  if (three) {
    SchreierBlock s;
    s.form = schreier_normal_form(w);
    s.hyperbolicity = is_hyperbolic_closure_3braid(w);
    if (r.main_lemma.pass) {
      s.direct_k = direct_read_k(w);
      s.direct_s = direct_read_s(w);
      r.turaev = turaev_genus_bounds(s.form.k);
    }
    if (is_generic(s.form) && s.form.s >= 1) r.s_bounds = three_braid_s_bounds(s.form.s);
    r.schreier = std::move(s);
  }

  if (opts.bracket) r.bracket = compute_bracket(w, r.state, opts.max_crossings, opts.threads);
  return r;
}

namespace detail {

inline nlohmann::json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

template <class T, class F>
nlohmann::json opt_json(const std::optional<T>& v, F&& f) {
  return v ? f(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json opt_int(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace detail

inline nlohmann::json to_json(const SyllableWord& w) {
  nlohmann::json syl = nlohmann::json::array();
  for (const auto& s : w.syllables) syl.push_back({s.gen, s.exp});
  return syl;
}

inline nlohmann::json to_json(const VolumeBounds& b) {
  nlohmann::json in = {
      {"t", detail::opt_int(b.inputs.t)},
      {"t_plus", detail::opt_int(b.inputs.t_plus)},
      {"t_minus", detail::opt_int(b.inputs.t_minus)},
      {"n", detail::opt_int(b.inputs.n)},
      {"m", detail::opt_int(b.inputs.m)},
      {"neg_chi", detail::opt_int(b.inputs.neg_chi)},
      {"beta_prime", detail::opt_int(b.inputs.beta_prime)},
      {"s", detail::opt_int(b.inputs.s)},
  };
  return {
      {"case", std::string(name(b.kind))},
      {"lower", b.lower},
      {"lower_weak", b.lower_weak ? nlohmann::json(*b.lower_weak) : nlohmann::json(nullptr)},
      {"effective_lower", b.effective_lower()},
      {"vacuous_lower", b.vacuous_lower()},
      {"upper", b.upper},
      {"inputs", in},
  };
}

inline nlohmann::json to_json(const MainLemmaReport& m) {
  nlohmann::json c2 = nlohmann::json::array();
  for (const auto& f : m.cond2_failures)
    c2.push_back({{"syllable", f.syllable}, {"clause", std::string(name(f.clause))}, {"reason", f.reason}});
  return {
      {"pass", m.pass},
      {"cyclically_reduced", m.cyclically_reduced},
      {"nice", m.nice},
      {"nice_cyclic_only", m.nice_cyclic_only},
      {"cond1", m.cond1},
      {"cond1_failures", m.cond1_failures},
      {"cond2_failures", c2},
      {"twist_ok", m.twist_ok},
      {"implied",
       m.pass ? nlohmann::json{{"connected", m.implied.connected},
                               {"prime", m.implied.prime},
                               {"A_adequate", m.implied.A_adequate},
                               {"TELC", m.implied.TELC},
                               {"hyperbolic", m.implied.hyperbolic}}
              : nlohmann::json(nullptr)},
  };
}

inline nlohmann::json to_json(const SchreierForm& f) {
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [p, q] : f.pairs) pairs.push_back({p, q});
  return {
      {"k", f.k},
      {"kind", std::string(name(f.kind))},
      {"pairs", pairs},
      {"power", f.power},
      {"s", f.s},
      {"degenerate_eta", f.degenerate_eta},
      {"normal_form", to_string(f)},
  };
}

inline nlohmann::json to_json(const HyperbolicityVerdict& h) {
  return {
      {"hyperbolic", h.hyperbolic},
      {"reason", h.reason},
      {"witness", h.witness ? nlohmann::json{h.witness->first, h.witness->second} : nlohmann::json(nullptr)},
  };
}

inline nlohmann::json to_json(const BracketSummary& s) {
  return {
      {"c", s.crossings},
      {"num_all_A_circles", s.all_A_circles},
      {"top_degree", s.top_degree},
      {"top_coefficient", detail::big_to_json(s.top_coefficient)},
      {"penultimate_abs", detail::big_to_json(s.penultimate_abs)},
  };
}

inline nlohmann::json to_json(const BracketBlock& b) {
  return {
      {"polynomial", b.polynomial.to_string()},
      {"summary", detail::opt_json(b.summary, [](const auto& s) { return to_json(s); })},
  };
}

inline nlohmann::json to_json(const AllAState& st) {
  nlohmann::json census = nlohmann::json::object();
  for (auto c : all_circle_classes) census[std::string(name(c))] = st.count(c);
  nlohmann::json circles = nlohmann::json::array();
  for (const auto& c : st.circles)
    circles.push_back({{"id", c.id},
                       {"class", std::string(name(c.klass))},
                       {"winding", c.winding},
                       {"support", c.support},
                       {"segments", c.segments.size()}});
  std::size_t vertical = 0;
  for (const auto& s : st.segments) vertical += s.orientation == SegmentOrientation::vertical;
  return {
      {"num_circles", st.circles.size()},
      {"num_segments", st.segments.size()},
      {"num_vertical_segments", vertical},
      {"census", census},
      {"m", st.m()},
      {"circles", circles},
  };
}

inline nlohmann::json to_json(const AnalysisReport& r) {
  const SyllableWord& w = r.word;
  nlohmann::json schreier = nullptr;
  if (r.schreier) {
    schreier = to_json(r.schreier->form);
    schreier["hyperbolicity"] = to_json(r.schreier->hyperbolicity);
    schreier["direct_read"] = r.schreier->direct_k
                                  ? nlohmann::json{{"k", *r.schreier->direct_k}, {"s", *r.schreier->direct_s}}
                                  : nlohmann::json(nullptr);
  }
  return {
      {"schema", report_schema},
      {"input", r.input},
      {"n", w.strands},
      {"word", to_string(w)},
      {"syllables", to_json(w)},
      {"cyclically_reduced", w.cyclically_reduced},
      {"rotation", w.rotation},
      {"crossings", r.crossings},
      {"exponent_sum", exponent_sum(w)},
      {"twist", {{"t", r.twist.t}, {"t_plus", r.twist.t_plus}, {"t_minus", r.twist.t_minus}}},
      {"state", to_json(r.state)},
      {"graph", {{"v", r.graph.v}, {"e", r.graph.e}, {"unreduced_edges", r.graph.unreduced_edges}}},
      {"neg_chi", r.graph.neg_chi},
      {"flags",
       {{"A_adequate", r.A_adequate},
        {"TELC", r.TELC},
        {"connected", r.connected},
        {"twist_regions_separated", r.twist_regions_separated}}},
      {"oc_identity", std::string(name(r.oc_identity))},
      {"main_lemma", to_json(r.main_lemma)},
      {"stoimenow", detail::opt_json(r.stoimenow,
                                     [](const auto& s) {
                                       return nlohmann::json{{"verdict", std::string(name(s.verdict))},
                                                             {"reason", s.reason}};
                                     })},
      {"bounds", detail::opt_json(r.bounds, [](const auto& b) { return to_json(b); })},
      {"bounds_error", r.bounds_error ? nlohmann::json(*r.bounds_error) : nlohmann::json(nullptr)},
      {"jones_bounds", detail::opt_json(r.jones_bounds, [](const auto& b) { return to_json(b); })},
      {"schreier", schreier},
      {"s_bounds", detail::opt_json(r.s_bounds,
                                    [](const auto& s) {
                                      return nlohmann::json{{"schreier3", to_json(s.schreier3)},
                                                            {"fkp3", to_json(s.fkp3)},
                                                            {"sharper", std::string(name(s.sharper))}};
                                    })},
      {"turaev", detail::opt_json(r.turaev,
                                  [](const auto& t) { return nlohmann::json{{"lower", t.first}, {"upper", t.second}}; })},
      {"bracket", detail::opt_json(r.bracket, [](const auto& b) { return to_json(b); })},
  };
}

}  // namespace braidvol
