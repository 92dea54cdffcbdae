// Builds the natural bijection between the coloring sets of the 5-vertex
// path and the 5-vertex star, applies one component, and certifies
// naturality through 4 colors.

#include <iostream>

#include "chromafun/functor.hpp"
#include "chromafun/generators.hpp"

using namespace chromafun;

int main() {
  FiniteGraph path = path_graph(5);
  FiniteGraph star = star_graph(4);

  std::cout << "chi(P_5, t) = " << chromatic_polynomial(path).to_string() << "\n";
  std::cout << "chi(K_1,4, t) = " << chromatic_polynomial(star).to_string() << "\n";

  NaturalBijection bijection = build_natural_bijection(path, star);
  Coloring c = {0, 1, 0, 1, 2};
  Coloring image = bijection.apply(3, c);
  std::cout << "r_[3](0,1,0,1,2) on the star: ";
  for (int color : image) std::cout << color << " ";
  std::cout << "\n";

  bool natural = verify_naturality_through(bijection, 4);
  std::cout << "natural through 4 colors: " << (natural ? "yes" : "no") << "\n";
  return natural ? 0 : 1;
}
