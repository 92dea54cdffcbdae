#pragma once

// Seeded generator of finite injection systems whose squares are fiber
// products by construction, so the compatibility condition holds by design
// rather than by filtering.

#include <numeric>
#include <random>
#include <vector>

#include "chromafun/cbs.hpp"

namespace fiber {

using chromafun::FiniteInjectionSystem;

/// Builds a random valid system.  Shape: X2 = Y2 = [m] with i2, j2 random
/// permutations; fibers of g are constant along the orbits of i2 o j2 so a
/// fiber-respecting bijection h exists; X1 is the fiber product of (g, i2)
/// relabeled by a random bijection rho.
inline FiniteInjectionSystem random_fiber_system(std::mt19937& rng) {
  std::uniform_int_distribution<int> m_dist(1, 6);
  const int m = m_dist(rng);

  auto random_permutation = [&](int size) {
    std::vector<int> p(size);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  std::vector<int> i2 = random_permutation(m);
  std::vector<int> j2 = random_permutation(m);
  std::vector<int> sigma(m);  // i2 o j2
  for (int w = 0; w < m; ++w) sigma[w] = i2[j2[w]];

  // Orbits of sigma; one fiber size per orbit.
  std::vector<int> fiber_size(m, -1);
  std::uniform_int_distribution<int> size_dist(0, 3);
  for (int w = 0; w < m; ++w) {
    if (fiber_size[w] >= 0) continue;
    int size = size_dist(rng);
    for (int x = w; fiber_size[x] < 0; x = sigma[x]) fiber_size[x] = size;
  }

  // Y1 = the disjoint union of the fibers; g sends a fiber to its base point.
  std::vector<int> g;
  std::vector<std::vector<int>> fiber_members(m);
  for (int w = 0; w < m; ++w) {
    for (int i = 0; i < fiber_size[w]; ++i) {
      fiber_members[w].push_back(static_cast<int>(g.size()));
      g.push_back(w);
    }
  }
  const int c = static_cast<int>(g.size());

  // h: Y1 -> Y1 maps fiber(w) onto fiber(sigma(w)), randomly within fibers.
  std::vector<int> h(c, -1);
  for (int w = 0; w < m; ++w) {
    std::vector<int> targets = fiber_members[sigma[w]];
    std::shuffle(targets.begin(), targets.end(), rng);
    for (std::size_t i = 0; i < fiber_members[w].size(); ++i) {
      h[fiber_members[w][i]] = targets[i];
    }
  }

  std::vector<int> rho = random_permutation(c);  // X1 -> Y1 relabeling
  std::vector<int> rho_inverse(c);
  for (int x = 0; x < c; ++x) rho_inverse[rho[x]] = x;
  std::vector<int> i2_inverse(m);
  for (int z = 0; z < m; ++z) i2_inverse[i2[z]] = z;

  FiniteInjectionSystem sys;
  sys.x1_size = c;
  sys.y1_size = c;
  sys.x2_size = m;
  sys.y2_size = m;
  sys.i1 = rho;
  sys.i2 = i2;
  sys.j2 = j2;
  sys.g = g;
  sys.f.resize(c);
  for (int x = 0; x < c; ++x) sys.f[x] = i2_inverse[g[rho[x]]];
  sys.j1.resize(c);
  for (int y = 0; y < c; ++y) sys.j1[y] = rho_inverse[h[y]];
  return sys;
}

}  // namespace fiber
