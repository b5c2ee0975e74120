#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidvol/all_a_state.hpp"
#include "braidvol/braid_word.hpp"
#include "braidvol/hypotheses.hpp"

namespace braidvol {

class InfeasibleSpec : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratorSpec {
  int n = 3;
  int syllable_count = 4;
  int neg_min = -6;           // negative exponents drawn from [neg_min, -3]
  int pos_max = 3;            // positive exponents drawn from [1, pos_max]; 0 disables positives
  double positive_rate = 0.3; // chance of trying a positive syllable at each step
  std::uint64_t seed = 1;
  int count = 1;
};

inline void validate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw InfeasibleSpec("gen: n must be >= 3, got " + std::to_string(spec.n));
  if (spec.syllable_count < 2 * (spec.n - 1))
    throw InfeasibleSpec("gen: syllable_count " + std::to_string(spec.syllable_count) + " < 2(n-1) = " +
                         std::to_string(2 * (spec.n - 1)));
  if (spec.n == 3 && spec.syllable_count % 2 != 0)
    throw InfeasibleSpec("gen: n = 3 needs an even syllable_count (generators must alternate)");
  if (spec.neg_min > -3) throw InfeasibleSpec("gen: neg_min must be <= -3");
  if (spec.pos_max < 0) throw InfeasibleSpec("gen: pos_max must be >= 0");
  if (spec.count < 0) throw InfeasibleSpec("gen: count must be >= 0");
  if (!(spec.positive_rate >= 0.0 && spec.positive_rate <= 1.0))
    throw InfeasibleSpec("gen: positive_rate must lie in [0, 1]");
}

namespace detail {

class FamilyBuilder {
public:
  FamilyBuilder(const GeneratorSpec& spec, std::mt19937_64& rng) : spec_(spec), rng_(rng) {}

  SyllableWord build() {
    return spec_.n == 3 ? build3() : build_general();
  }

private:
  struct Slot {
    int gen;
    bool positive;
  };

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
  bool want_positive() { return spec_.pos_max > 0 && coin(spec_.positive_rate); }

  SyllableWord finish(const std::vector<Slot>& slots) {
    std::vector<Syllable> out;
    out.reserve(slots.size());
    for (const auto& s : slots)
      out.push_back({s.gen, s.positive ? uniform(1, spec_.pos_max) : uniform(spec_.neg_min, -3)});
    return make_syllable_word(spec_.n, std::move(out));
  }

  // Alternating s1/s2 syllables; positives form a cyclically independent set.
  SyllableWord build3() {
    const int l = spec_.syllable_count;
    std::vector<Slot> slots;
    const int first = uniform(1, 2);
    for (int i = 0; i < l; ++i) slots.push_back({i % 2 == 0 ? first : 3 - first, false});
    for (int i = 0; i < l; ++i) {
      const bool prev = slots[static_cast<std::size_t>((i + l - 1) % l)].positive;
      const bool next = slots[static_cast<std::size_t>((i + 1) % l)].positive;
      if (!prev && !next && want_positive()) slots[static_cast<std::size_t>(i)].positive = true;
    }
    return finish(slots);
  }

  // Blocks are single negative syllables or positive gadgets with their negative
  // neighbourhood; insertions happen only between blocks and must keep every
  // syllable its own twist region.
  SyllableWord build_general() {
    for (;;)
      if (auto w = try_build_general()) return *w;
  }

  std::optional<SyllableWord> try_build_general() {
    const int g = spec_.n - 1;
    std::vector<std::vector<Slot>> blocks;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 1000) return std::nullopt;
      std::vector<int> p1(static_cast<std::size_t>(g)), p2(static_cast<std::size_t>(g));
      std::iota(p1.begin(), p1.end(), 1);
      std::iota(p2.begin(), p2.end(), 1);
      std::shuffle(p1.begin(), p1.end(), rng_);
      std::shuffle(p2.begin(), p2.end(), rng_);
      if (p1.back() == p2.front() || p2.back() == p1.front()) continue;
      blocks.clear();
      for (int v : p1) blocks.push_back({{v, false}});
      for (int v : p2) blocks.push_back({{v, false}});
      if (separated(blocks)) break;
    }
    int budget = spec_.syllable_count - 2 * g;
    int failures = 0;
    while (budget > 0) {
      if (failures > 200) return std::nullopt;
      const std::size_t gap = static_cast<std::size_t>(uniform(0, static_cast<int>(blocks.size()) - 1));
      if (want_positive()) {
        auto trial = blocks;
        const int cost = insert_positive(trial, gap, budget);
        if (cost > 0 && separated(trial)) {
          blocks = std::move(trial);
          budget -= cost;
          continue;
        }
      }
      const int left = blocks[gap].back().gen;
      const int right = blocks[(gap + 1) % blocks.size()].front().gen;
      std::vector<int> options;
      for (int v = 1; v <= g; ++v)
        if (v != left && v != right) options.push_back(v);
      const int v = options[static_cast<std::size_t>(uniform(0, static_cast<int>(options.size()) - 1))];
      const auto inserted = blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(gap + 1), {{v, false}});
      if (!separated(blocks)) {
        blocks.erase(inserted);
        ++failures;
        continue;
      }
      budget -= 1;
    }
    return finish(flatten(blocks));
  }

  // Places a positive syllable after block `gap` together with the negative
  // neighbours condition (2) asks for. Neighbours already present as single
  // negative blocks are reused and absorbed into the new block. Returns the
  // number of new syllables, 0 if nothing fits.
  int insert_positive(std::vector<std::vector<Slot>>& blocks, std::size_t gap, int budget) {
    const int g = spec_.n - 1;
    const int gen = uniform(1, g);
    std::vector<int> before, after;
    if (gen == 1 || gen == g) {
      const int nb = gen == 1 ? 2 : g - 1;
      before = {nb};
      after = {nb};
    } else {
      before = {gen - 1, gen + 1};
      after = {gen - 1, gen + 1};
      if (coin(0.5)) std::swap(before[0], before[1]);
      if (coin(0.5)) std::swap(after[0], after[1]);
    }
    if (coin(0.25)) before.insert(before.begin(), gen);
    if (coin(0.25)) after.push_back(gen);

    // Reuse single negative blocks ending at `gap` (no wrap past the front).
    std::size_t lo = gap + 1;
    std::size_t reuse_l = 0;
    while (reuse_l < before.size() && lo > 0) {
      const auto& b = blocks[lo - 1];
      if (b.size() != 1 || b[0].positive || b[0].gen != before[before.size() - 1 - reuse_l]) break;
      --lo;
      ++reuse_l;
    }
    std::size_t hi = gap + 1;
    std::size_t reuse_r = 0;
    while (reuse_r < after.size() && hi < blocks.size()) {
      const auto& b = blocks[hi];
      if (b.size() != 1 || b[0].positive || b[0].gen != after[reuse_r]) break;
      ++hi;
      ++reuse_r;
    }
    const int cost = static_cast<int>(before.size() + after.size() - reuse_l - reuse_r) + 1;
    if (cost > budget) return 0;
    std::vector<Slot> block;
    for (int v : before) block.push_back({v, false});
    block.push_back({gen, true});
    for (int v : after) block.push_back({v, false});
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(lo), blocks.begin() + static_cast<std::ptrdiff_t>(hi));
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(lo), std::move(block));
    return cost;
  }

  static std::vector<Slot> flatten(const std::vector<std::vector<Slot>>& blocks) {
    std::vector<Slot> slots;
    for (const auto& b : blocks) slots.insert(slots.end(), b.begin(), b.end());
    return slots;
  }

  bool separated(const std::vector<std::vector<Slot>>& blocks) const {
    const auto slots = flatten(blocks);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].gen == slots[(i + 1) % slots.size()].gen) return false;
    std::vector<Syllable> syl;
    for (const auto& s : slots) syl.push_back({s.gen, -3});
    return syllables_are_twist_regions(make_syllable_word(spec_.n, std::move(syl)));
  }

  const GeneratorSpec& spec_;
  std::mt19937_64& rng_;
};

}  // namespace detail

// Words satisfying check_main_lemma by construction; deterministic for a fixed seed.
inline std::vector<SyllableWord> generate_family(const GeneratorSpec& spec) {
  validate(spec);
  std::mt19937_64 rng(spec.seed);
  detail::FamilyBuilder builder(spec, rng);
  std::vector<SyllableWord> out;
  out.reserve(static_cast<std::size_t>(spec.count));
  for (int i = 0; i < spec.count; ++i) {
    SyllableWord w = builder.build();
    const MainLemmaReport r = check_main_lemma(w);
    if (!r.pass) throw std::logic_error("generator emitted a word outside the family: " + to_string(w));
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace braidvol
