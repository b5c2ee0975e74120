#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "braidvol/all_a_state.hpp"
#include "braidvol/hypotheses.hpp"

namespace braidvol {

// v8 = 8 Lambda(pi/4), v3 = 2 Lambda(pi/6), Lambda the Lobachevsky function.
inline constexpr double v8 = 3.663862376708876;
inline constexpr double v3 = 1.014941606409654;

// Additive constant of the cusp-area volume bound for 3-braids.
inline constexpr double fkp_offset = 276.6;

class GateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class BoundCase { Cor, N3, N4Boundary, N4General, Jones, Schreier3, FKP3 };

inline std::string_view name(BoundCase c) {
  switch (c) {
    case BoundCase::Cor: return "Cor";
    case BoundCase::N3: return "N3";
    case BoundCase::N4Boundary: return "N4Boundary";
    case BoundCase::N4General: return "N4General";
    case BoundCase::Jones: return "Jones";
    case BoundCase::Schreier3: return "Schreier3";
    case BoundCase::FKP3: return "FKP3";
  }
  return "?";
}

struct BoundInputs {
  std::optional<int> t, t_plus, t_minus, n, m, neg_chi, beta_prime, s;
};

struct VolumeBounds {
  BoundCase kind = BoundCase::Cor;
  double lower = 0.0;  // raw formula value, may be <= 0
  std::optional<double> lower_weak;
  double upper = 0.0;
  BoundInputs inputs;

  double effective_lower() const noexcept { return std::max(lower, 0.0); }
  bool vacuous_lower() const noexcept { return lower <= 0.0; }
};

// Either a passing family report or an explicit caller assertion of the hypotheses.
struct BoundGate {
  bool satisfied = false;
  std::string reason;

  static BoundGate from(const MainLemmaReport& r) {
    return {r.pass, r.pass ? "main lemma conditions hold" : "main lemma conditions fail"};
  }
  static BoundGate assume(std::string why = "caller override") { return {true, std::move(why)}; }
};

// Connected, prime, A-adequate, TELC diagram with t >= 2 twist regions.
inline VolumeBounds cor_bounds(int neg_chi, int t, const BoundGate& gate) {
  if (!gate.satisfied) throw GateError("cor_bounds: " + gate.reason);
  if (t < 2) throw GateError("cor_bounds: requires t >= 2, got t = " + std::to_string(t));
  VolumeBounds b;
  b.kind = BoundCase::Cor;
  b.lower = v8 * neg_chi;
  b.upper = 10.0 * v3 * (t - 1);
  b.inputs.neg_chi = neg_chi;
  b.inputs.t = t;
  return b;
}

inline bool positives_only_in_boundary_generators(const SyllableWord& word) {
  return std::all_of(word.syllables.begin(), word.syllables.end(), [&](const Syllable& s) {
    return s.exp < 0 || s.gen == 1 || s.gen == word.strands - 1;
  });
}

// Case dispatch over n and the location of positive syllables.
inline VolumeBounds volume_bounds(const SyllableWord& word, const AllAState& state,
                                  const ReducedStateGraph& graph, const MainLemmaReport& gate) {
  if (!gate.pass) throw GateError("volume_bounds: main lemma conditions fail");
  if (!state.classification_total()) throw GateError("volume_bounds: circle classification incomplete");
  const TwistCounts tc = twist_counts(word);
  const int n = word.strands;
  const int m = static_cast<int>(state.m());

  VolumeBounds b;
  b.inputs = {tc.t, tc.t_plus, tc.t_minus, n, m, graph.neg_chi, std::nullopt, std::nullopt};
  b.upper = 10.0 * v3 * (tc.t - 1);
  if (n == 3) {
    if (graph.neg_chi != tc.t_minus - 1)
      throw std::logic_error("volume_bounds: -chi(G'_A) = " + std::to_string(graph.neg_chi) +
                             " differs from t^- - 1 = " + std::to_string(tc.t_minus - 1));
    b.kind = BoundCase::N3;
    b.lower = v8 * (tc.t_minus - 1);
    b.lower_weak = v8 / 2.0 * (tc.t - 2);
  } else if (positives_only_in_boundary_generators(word)) {
    b.kind = BoundCase::N4Boundary;
    b.lower = v8 * (tc.t_minus - (n + m - 2));
    b.lower_weak = v8 / 2.0 * (tc.t - 2 * (n + m - 2));
  } else {
    b.kind = BoundCase::N4General;
    b.lower = v8 * (tc.t_minus - tc.t_plus - (n + m - 2));
  }
  return b;
}

// Bounds in the stable penultimate coefficient |beta'| = 1 - chi(G'_A).
inline VolumeBounds jones_bounds(const SyllableWord& word, const AllAState& state,
                                 const ReducedStateGraph& graph, const MainLemmaReport& gate) {
  if (!gate.pass) throw GateError("jones_bounds: main lemma conditions fail");
  if (word.strands != 3 && !positives_only_in_boundary_generators(word))
    throw GateError("jones_bounds: positive syllables in interior generators (n >= 4) are not covered");
  const int n = word.strands;
  const int m = static_cast<int>(state.m());
  const int beta_prime = 1 + graph.neg_chi;
  VolumeBounds b;
  b.kind = BoundCase::Jones;
  b.lower = v8 * (beta_prime - 1);
  b.upper = 20.0 * v3 * (beta_prime + n + m - 3.5);
  b.inputs.n = n;
  b.inputs.m = m;
  b.inputs.neg_chi = graph.neg_chi;
  b.inputs.beta_prime = beta_prime;
  return b;
}

struct SBounds {
  VolumeBounds schreier3;
  VolumeBounds fkp3;
  BoundCase sharper = BoundCase::Schreier3;
};

inline SBounds three_braid_s_bounds(int s) {
  if (s < 1) throw GateError("three_braid_s_bounds: requires s >= 1, got " + std::to_string(s));
  SBounds r;
  r.schreier3.kind = BoundCase::Schreier3;
  r.schreier3.lower = v8 * (s - 1);
  r.schreier3.upper = 4.0 * v8 * s;
  r.schreier3.inputs.s = s;
  r.fkp3.kind = BoundCase::FKP3;
  r.fkp3.lower = 4.0 * v3 * s - fkp_offset;
  r.fkp3.upper = 4.0 * v8 * s;
  r.fkp3.inputs.s = s;
  r.sharper = r.schreier3.lower >= r.fkp3.lower ? BoundCase::Schreier3 : BoundCase::FKP3;
  return r;
}

// Smallest s at which the cusp-area lower bound strictly beats v8 (s - 1).
inline int s_bound_crossover() {
  int s = 1;
  while (three_braid_s_bounds(s).sharper == BoundCase::Schreier3) ++s;
  return s;
}

// |k| - 1 <= g_T <= |k|, stated for k != 0 only.
inline std::optional<std::pair<int, int>> turaev_genus_bounds(int k) {
  if (k == 0) return std::nullopt;
  return std::pair{std::abs(k) - 1, std::abs(k)};
}

}  // namespace braidvol
