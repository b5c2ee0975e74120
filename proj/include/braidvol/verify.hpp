#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "braidvol/report.hpp"

namespace braidvol {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::string word;
  std::vector<IdentityCheck> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Cross-checks every identity available for a family word. Throws GateError outside the family.
inline VerifyResult verify_identities(const SyllableWord& w, std::size_t max_crossings = default_max_crossings,
                                      unsigned threads = 0) {
  const MainLemmaReport ml = check_main_lemma(w);
  if (!ml.pass) throw GateError("verify: main lemma conditions fail for " + to_string(w));
  VerifyResult r;
  r.word = to_string(w);
  auto add = [&](std::string name, bool pass, std::string detail) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  auto eq = [](auto a, auto b) { return std::to_string(a) + (a == b ? " == " : " != ") + std::to_string(b); };

  const int n = w.strands;
  const AllAState st = analyze_state(w);
  const ReducedStateGraph g = reduced_graph(st);
  const TwistCounts tc = twist_counts(w);

  add("A_adequate", is_A_adequate(st), "no segment joins a circle to itself");
  add("TELC", satisfies_TELC(st, w), "parallel segments come from one syllable");
  add("connected", is_connected_closure(w), "every generator occurs");
  add("classification_total", st.classification_total(),
      std::to_string(st.count(CircleClass::unclassified)) + " unclassified circles");
  add("oc_identity", check_oc_identity(st, w) == OcIdentityStatus::holds,
      std::string(name(check_oc_identity(st, w))));

  bool winding_ok = true;
  for (const auto& c : st.circles) winding_ok = winding_ok && (c.winding == 0 || c.winding == 1);
  add("winding", winding_ok, "every winding in {0,1}");

  int small = 0;
  for (const auto& s : w.syllables)
    if (s.exp < 0) small += -s.exp - 1;
  add("small_inner_count", static_cast<int>(st.count(CircleClass::small_inner)) == small,
      eq(static_cast<int>(st.count(CircleClass::small_inner)), small));

  const int medium = static_cast<int>(st.count(CircleClass::medium_inner));
  const bool boundary = positives_only_in_boundary_generators(w);
  const bool medium_ok = boundary ? medium == tc.t_plus : (tc.t_plus <= medium && medium <= 2 * tc.t_plus);
  add("medium_inner_count", medium_ok,
      "t+ = " + std::to_string(tc.t_plus) + ", #MediumInner = " + std::to_string(medium) +
          (boundary ? " (boundary positives: equality)" : ""));

  const int ewnw =
      static_cast<int>(st.count(CircleClass::essential_wandering) + st.count(CircleClass::nonwandering));
  add("EWC", ewnw <= n - 2, "#EW + #NW = " + std::to_string(ewnw) + ", n - 2 = " + std::to_string(n - 2));

  if (n == 3) {
    const auto outer = st.count(CircleClass::essential_wandering) + st.count(CircleClass::nonessential_wandering) +
                       st.count(CircleClass::nonwandering);
    add("single_outer_circle", outer == 1, std::to_string(outer) + " wandering or nonwandering circles");
    add("neg_chi_three_braid", g.neg_chi == tc.t_minus - 1, eq(g.neg_chi, tc.t_minus - 1));
    const StoimenowResult sr = stoimenow_A_adequate_3braid(w);
    add("stoimenow", sr.adequate(), std::string(name(sr.verdict)) + ": " + sr.reason);
    const SchreierForm f = schreier_normal_form(w);
    add("generic", is_generic(f), to_string(f));
    add("direct_read_k", direct_read_k(w) == f.k, eq(direct_read_k(w), f.k));
    add("direct_read_s", direct_read_s(w) == f.s && f.s == tc.t_minus,
        "direct " + std::to_string(direct_read_s(w)) + ", algorithm " + std::to_string(f.s) + ", t- " +
            std::to_string(tc.t_minus));
    const HyperbolicityVerdict h = is_hyperbolic_closure_3braid(w);
    add("hyperbolic", h.hyperbolic, h.reason);
  }

  const std::size_t c = crossing_count(w);
  if (c <= max_crossings) {
    try {
      const BracketSummary b = stable_penultimate_coefficient(w, max_crossings, threads);
      add("bracket_penultimate", b.penultimate_abs == BigInt(1 + g.neg_chi),
          "|beta'| = " + b.penultimate_abs.str() + ", 1 - chi(G'_A) = " + std::to_string(1 + g.neg_chi));
    } catch (const OracleError& e) {
      add("bracket_penultimate", false, e.what());
    }
  } else {
    add("bracket_penultimate", true,
        "skipped: " + std::to_string(c) + " crossings above cap " + std::to_string(max_crossings));
  }
  return r;
}

inline nlohmann::json to_json(const VerifyResult& v) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"word", v.word}, {"pass", v.all_pass()}, {"checks", checks}};
}

}  // namespace braidvol
