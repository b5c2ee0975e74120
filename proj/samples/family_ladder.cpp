// Walks (s1^-3 s2^-3)^m and prints the census, bounds and normal form for each m.
#include <iomanip>
#include <iostream>

#include "braidvol/braidvol.hpp"

int main() {
  namespace bv = braidvol;
  std::cout << std::fixed << std::setprecision(4);
  for (int m = 2; m <= 6; ++m) {
    std::vector<bv::Syllable> syl;
    for (int i = 0; i < m; ++i) {
      syl.push_back({1, -3});
      syl.push_back({2, -3});
    }
    const auto w = bv::make_syllable_word(3, syl);
    const auto st = bv::analyze_state(w);
    const auto g = bv::reduced_graph(st);
    const auto b = bv::volume_bounds(w, st, g, bv::check_main_lemma(w));
    const auto f = bv::schreier_normal_form(w);
    std::cout << "m=" << m << "  SmallInner=" << st.count(bv::CircleClass::small_inner)
              << "  -chi=" << g.neg_chi << "  vol in [" << b.lower << ", " << b.upper << "]"
              << "  " << bv::to_string(f) << '\n';
  }
}
