// Reproduces the triangular-ladder example: at three colors the plain ladder
// has a continuum of colorings while the railed ladder and the diagonal grid
// have exactly six.

#include <iostream>

#include "chromafun/infinite.hpp"

using namespace chromafun;

int main() {
  for (const char* name : {"fig3-g1", "fig3-g2", "fig3-g3", "natural-tree"}) {
    CountableGraph g = fixture_by_name(name);
    auto chi = chromatic_number_countable(g);
    std::cout << name << ": chi = " << (chi ? std::to_string(*chi) : "infinite");
    for (int n = 2; n <= 3; ++n) {
      std::cout << ", #colorings[" << n << "] = " << count_colorings(g, n).to_string();
    }
    std::cout << "\n";
  }

  auto verdict = decide_equivalent_countable(fixture_by_name("fig3-g2"),
                                             fixture_by_name("fig3-g3"));
  std::cout << "G2 ~ G3: " << (verdict == CountableEquivalence::Equivalent) << "\n";
  verdict = decide_equivalent_countable(fixture_by_name("fig3-g1"),
                                        fixture_by_name("fig3-g2"));
  std::cout << "G1 ~ G2: " << (verdict == CountableEquivalence::Equivalent) << "\n";
  return 0;
}
