#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromafun/errors.hpp"
#include "chromafun/functor.hpp"
#include "chromafun/graph.hpp"

namespace chromafun {

namespace detail {

inline bool is_injective_map(const std::vector<int>& map, int target_size) {
  std::vector<char> seen(target_size, 0);
  for (int image : map) {
    if (image < 0 || image >= target_size || seen[image]) return false;
    seen[image] = 1;
  }
  return true;
}

inline void check_map_shape(const std::vector<int>& map, int source_size,
                            int target_size, const std::string& name) {
  if (static_cast<int>(map.size()) != source_size) {
    throw precondition_error("map " + name + " has the wrong length");
  }
  for (int image : map) {
    if (image < 0 || image >= target_size) {
      throw precondition_error("map " + name + " has an out-of-range image");
    }
  }
}

}  // namespace detail

/// The standard back-and-forth bijection from injections f: A -> B and
/// g: B -> A.  C^0 = A \ g(B), C^{n+1} = g(f(C^n)); r = f on C, g^{-1} off C.
inline std::vector<int> classic_cbs(const std::vector<int>& f, const std::vector<int>& g,
                                    int a_size, int b_size) {
  detail::check_map_shape(f, a_size, b_size, "f");
  detail::check_map_shape(g, b_size, a_size, "g");
  if (!detail::is_injective_map(f, b_size) || !detail::is_injective_map(g, a_size)) {
    throw precondition_error("classic_cbs requires injective maps");
  }
  std::vector<int> g_inverse(a_size, -1);
  for (int y = 0; y < b_size; ++y) g_inverse[g[y]] = y;

  std::vector<char> in_c(a_size, 0);
  std::vector<int> frontier;
  for (int x = 0; x < a_size; ++x) {
    if (g_inverse[x] < 0) {
      in_c[x] = 1;
      frontier.push_back(x);
    }
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      int forward = g[f[x]];
      if (!in_c[forward]) {
        in_c[forward] = 1;
        next.push_back(forward);
      }
    }
    frontier = std::move(next);
  }
  std::vector<int> r(a_size);
  for (int x = 0; x < a_size; ++x) r[x] = in_c[x] ? f[x] : g_inverse[x];
  return r;
}

/// Two commuting squares of maps with injective horizontals, as in the
/// relative Cantor-Bernstein-Schroeder theorem.  Sets are index ranges;
/// X1 has x1_size elements and so on.
struct FiniteInjectionSystem {
  int x1_size = 0, x2_size = 0, y1_size = 0, y2_size = 0;
  std::vector<int> f;   // X1 -> X2, any map
  std::vector<int> g;   // Y1 -> Y2, any map
  std::vector<int> i1;  // X1 -> Y1, injective
  std::vector<int> i2;  // X2 -> Y2, injective
  std::vector<int> j1;  // Y1 -> X1, injective
  std::vector<int> j2;  // Y2 -> X2, injective
};

/// Checks shapes, injectivity, commutativity of both squares, and the
/// compatibility condition g^{-1}(i2(Z)) = i1(f^{-1}(Z)) and
/// f^{-1}(j2(W)) = j1(g^{-1}(W)).  Both sides commute with unions, so
/// checking all singletons Z and W decides the condition for every subset;
/// singleton complements are checked as well, which is then redundant but
/// cheap.  Throws with a witness on failure.
inline void validate_injection_system(const FiniteInjectionSystem& sys) {
  detail::check_map_shape(sys.f, sys.x1_size, sys.x2_size, "f");
  detail::check_map_shape(sys.g, sys.y1_size, sys.y2_size, "g");
  detail::check_map_shape(sys.i1, sys.x1_size, sys.y1_size, "i1");
  detail::check_map_shape(sys.i2, sys.x2_size, sys.y2_size, "i2");
  detail::check_map_shape(sys.j1, sys.y1_size, sys.x1_size, "j1");
  detail::check_map_shape(sys.j2, sys.y2_size, sys.x2_size, "j2");
  if (!detail::is_injective_map(sys.i1, sys.y1_size) ||
      !detail::is_injective_map(sys.i2, sys.y2_size) ||
      !detail::is_injective_map(sys.j1, sys.x1_size) ||
      !detail::is_injective_map(sys.j2, sys.x2_size)) {
    throw precondition_error("i1, i2, j1, j2 must be injective");
  }
  for (int x = 0; x < sys.x1_size; ++x) {
    if (sys.g[sys.i1[x]] != sys.i2[sys.f[x]]) {
      throw precondition_error("square g o i1 = i2 o f fails at x1=" + std::to_string(x));
    }
  }
  for (int y = 0; y < sys.y1_size; ++y) {
    if (sys.f[sys.j1[y]] != sys.j2[sys.g[y]]) {
      throw precondition_error("square f o j1 = j2 o g fails at y1=" + std::to_string(y));
    }
  }

  auto check_condition = [](const std::vector<int>& vertical_left,   // X1 -> X2 (f)
                            const std::vector<int>& vertical_right,  // Y1 -> Y2 (g)
                            const std::vector<int>& top,             // X1 -> Y1 (i1)
                            const std::vector<int>& bottom,          // X2 -> Y2 (i2)
                            int x1_size, int y1_size, int x2_size,
                            const std::string& label) {
    // For each subset Z of X2 (singletons and their complements), compare
    // g^{-1}(i2(Z)) with i1(f^{-1}(Z)) as subsets of Y1.
    auto run = [&](const std::vector<char>& z) {
      std::vector<char> lhs(y1_size, 0), rhs(y1_size, 0);
      for (int y = 0; y < y1_size; ++y) {
        int image = vertical_right[y];
        for (int z2 = 0; z2 < x2_size; ++z2) {
          if (z[z2] && bottom[z2] == image) lhs[y] = 1;
        }
      }
      for (int x = 0; x < x1_size; ++x) {
        if (z[vertical_left[x]]) rhs[top[x]] = 1;
      }
      for (int y = 0; y < y1_size; ++y) {
        if (lhs[y] != rhs[y]) {
          return y;
        }
      }
      return -1;
    };
    for (int z2 = 0; z2 < x2_size; ++z2) {
      std::vector<char> z(x2_size, 0);
      z[z2] = 1;
      if (int w = run(z); w >= 0) {
        throw precondition_error("compatibility condition (" + label +
                                 ") fails for the singleton {" + std::to_string(z2) +
                                 "} at element " + std::to_string(w));
      }
      for (auto& bit : z) bit ^= 1;
      if (int w = run(z); w >= 0) {
        throw precondition_error("compatibility condition (" + label +
                                 ") fails for the complement of {" +
                                 std::to_string(z2) + "} at element " +
                                 std::to_string(w));
      }
    }
  };
  // g^{-1}(i2(Z)) = i1(f^{-1}(Z)) for Z subset of X2.
  check_condition(sys.f, sys.g, sys.i1, sys.i2, sys.x1_size, sys.y1_size, sys.x2_size,
                  "g^-1 i2 = i1 f^-1");
  // f^{-1}(j2(W)) = j1(g^{-1}(W)) for W subset of Y2.
  check_condition(sys.g, sys.f, sys.j1, sys.j2, sys.y1_size, sys.x1_size, sys.y2_size,
                  "f^-1 j2 = j1 g^-1");
}

struct CbsResult {
  std::vector<int> r1;  // bijection X1 -> Y1
  std::vector<int> r2;  // bijection X2 -> Y2
  std::vector<std::vector<int>> c1_levels;  // C_1^n as sorted index lists
  std::vector<std::vector<int>> c2_levels;  // C_2^n
  std::vector<char> in_c1;
  std::vector<char> in_c2;
};

/// The relative CBS construction: C_a^0 = X_a \ j_a(Y_a),
/// C_a^{n+1} = j_a(i_a(C_a^n)); r_a = i_a on C_a and j_a^{-1} off it.
/// The returned bijections satisfy g o r1 = r2 o f.
inline CbsResult relative_cbs(const FiniteInjectionSystem& sys) {
  validate_injection_system(sys);
  CbsResult result;
  result.in_c1.assign(sys.x1_size, 0);
  result.in_c2.assign(sys.x2_size, 0);

  auto run_side = [](int x_size, int y_size, const std::vector<int>& i,
                     const std::vector<int>& j, std::vector<char>& in_c,
                     std::vector<std::vector<int>>& levels) {
    std::vector<int> j_inverse(x_size, -1);
    for (int y = 0; y < y_size; ++y) j_inverse[j[y]] = y;
    std::vector<int> level;
    for (int x = 0; x < x_size; ++x) {
      if (j_inverse[x] < 0) level.push_back(x);
    }
    while (true) {
      for (int x : level) in_c[x] = 1;
      levels.push_back(level);
      std::vector<int> next;
      bool grew = false;
      for (int x : level) {
        int forward = j[i[x]];
        next.push_back(forward);
        if (!in_c[forward]) grew = true;
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (!grew) break;  // every later iterate stays inside the union
      level = std::move(next);
    }
    std::vector<int> r(x_size);
    for (int x = 0; x < x_size; ++x) r[x] = in_c[x] ? i[x] : j_inverse[x];
    return r;
  };

  result.r1 = run_side(sys.x1_size, sys.y1_size, sys.i1, sys.j1, result.in_c1,
                       result.c1_levels);
  result.r2 = run_side(sys.x2_size, sys.y2_size, sys.i2, sys.j2, result.in_c2,
                       result.c2_levels);
  return result;
}

/// The chromatic instance of the relative CBS theorem: mutual surjections
/// phi: g1 ->> g2 and psi: g2 ->> g1 plus a color injection f: [m] -> [n]
/// produce commuting bijections between the coloring sets.
struct ChromaticCbsResult {
  ColoringSet x1, x2;  // chi(g1, [m]), chi(g1, [n])
  ColoringSet y1, y2;  // chi(g2, [m]), chi(g2, [n])
  CbsResult cbs;
};

inline ChromaticCbsResult chromatic_cbs(const FiniteGraph& g1, const FiniteGraph& g2,
                                        const GraphHom& phi, const GraphHom& psi,
                                        const Injection& f,
                                        long long budget = kDefaultColoringBudget) {
  if (phi.source != g1 || phi.target != g2 || psi.source != g2 || psi.target != g1) {
    throw precondition_error("homomorphism endpoints do not match the graphs");
  }
  if (!validate_hom(phi) || !is_surjective_hom(phi)) {
    throw precondition_error("phi is not a surjective homomorphism");
  }
  if (!validate_hom(psi) || !is_surjective_hom(psi)) {
    throw precondition_error("psi is not a surjective homomorphism");
  }
  const int m = f.source_size;
  const int n = f.target_size;
  ChromaticCbsResult out;
  out.x1 = enumerate_colorings(g1, m, budget);
  out.x2 = enumerate_colorings(g1, n, budget);
  out.y1 = enumerate_colorings(g2, m, budget);
  out.y2 = enumerate_colorings(g2, n, budget);

  FiniteInjectionSystem sys;
  sys.x1_size = static_cast<int>(out.x1.size());
  sys.x2_size = static_cast<int>(out.x2.size());
  sys.y1_size = static_cast<int>(out.y1.size());
  sys.y2_size = static_cast<int>(out.y2.size());
  sys.f.reserve(out.x1.size());
  for (const auto& c : out.x1.colorings()) sys.f.push_back(out.x2.index_of(pushforward(f, c)));
  sys.g.reserve(out.y1.size());
  for (const auto& c : out.y1.colorings()) sys.g.push_back(out.y2.index_of(pushforward(f, c)));
  // Horizontal injections: i = psi^* (pullback along psi), j = phi^*.
  sys.i1.reserve(out.x1.size());
  for (const auto& c : out.x1.colorings()) sys.i1.push_back(out.y1.index_of(pullback(psi, c)));
  sys.i2.reserve(out.x2.size());
  for (const auto& c : out.x2.colorings()) sys.i2.push_back(out.y2.index_of(pullback(psi, c)));
  sys.j1.reserve(out.y1.size());
  for (const auto& c : out.y1.colorings()) sys.j1.push_back(out.x1.index_of(pullback(phi, c)));
  sys.j2.reserve(out.y2.size());
  for (const auto& c : out.y2.colorings()) sys.j2.push_back(out.x2.index_of(pullback(phi, c)));

  out.cbs = relative_cbs(sys);
  return out;
}

// ---------------------------------------------------------------------------
// Lazy systems: sets too large (or infinite) to materialize, described by
// membership oracles.  Deciding x in C_a is only semi-decidable in general,
// so evaluation takes an explicit fuel bound and can come back undetermined.

using LazyElement = std::int64_t;

/// One side (alpha = 1 or 2) of a lazy injection system.
struct LazySystemSide {
  std::function<LazyElement(LazyElement)> i_apply;
  std::function<std::optional<LazyElement>(LazyElement)> j_inverse;
  std::function<std::optional<LazyElement>(LazyElement)> i_inverse;
};

struct LazyOutcome {
  bool determined = false;
  bool in_c = false;
  std::optional<LazyElement> value;  // r_alpha(x) when determined
  std::int64_t steps = 0;            // backward steps actually taken
};

/// Decides x in C_alpha by tracing the j o i preimage chain backwards.
/// Each backward step (one j^{-1} followed by one i^{-1}) costs one unit of
/// fuel; if the chain terminates outside an image, membership is decided.
/// A chain that revisits an element is periodic and can never reach C^0,
/// which also decides membership (x is outside C).
inline LazyOutcome lazy_cbs_evaluate(const LazySystemSide& side, LazyElement x,
                                     std::int64_t fuel) {
  LazyOutcome out;
  LazyElement current = x;
  std::set<LazyElement> visited;
  visited.insert(current);
  while (true) {
    std::optional<LazyElement> back_j;
    try {
      back_j = side.j_inverse(current);
    } catch (const std::exception& e) {
      throw precondition_error("lazy oracle j_inverse failed after " +
                               std::to_string(out.steps) + " steps: " + e.what());
    }
    if (!back_j) {
      out.determined = true;
      out.in_c = true;  // current is in C^0, so x is in C
      out.value = side.i_apply(x);
      return out;
    }
    std::optional<LazyElement> back_i;
    try {
      back_i = side.i_inverse(*back_j);
    } catch (const std::exception& e) {
      throw precondition_error("lazy oracle i_inverse failed after " +
                               std::to_string(out.steps) + " steps: " + e.what());
    }
    if (!back_i) {
      out.determined = true;
      out.in_c = false;  // chain leaves the image of j o i: x is outside C
      out.value = side.j_inverse(x);
      return out;
    }
    if (visited.count(*back_i)) {
      out.determined = true;
      out.in_c = false;
      out.value = side.j_inverse(x);
      return out;
    }
    if (out.steps == fuel) {
      return out;  // undetermined; out.steps reports the reached depth
    }
    ++out.steps;
    current = *back_i;
    visited.insert(current);
  }
}

/// Views one side of a finite system through the lazy interface.
inline LazySystemSide lazy_side_from_finite(const std::vector<int>& i,
                                            const std::vector<int>& j, int x_size,
                                            int y_size) {
  auto j_inv = std::make_shared<std::vector<int>>(x_size, -1);
  for (int y = 0; y < y_size; ++y) (*j_inv)[j[y]] = y;
  auto i_inv = std::make_shared<std::vector<int>>(y_size, -1);
  for (int x = 0; x < x_size; ++x) (*i_inv)[i[x]] = x;
  LazySystemSide side;
  side.i_apply = [i](LazyElement x) { return static_cast<LazyElement>(i.at(x)); };
  side.j_inverse = [j_inv](LazyElement x) -> std::optional<LazyElement> {
    int y = j_inv->at(x);
    if (y < 0) return std::nullopt;
    return static_cast<LazyElement>(y);
  };
  side.i_inverse = [i_inv](LazyElement y) -> std::optional<LazyElement> {
    int x = i_inv->at(y);
    if (x < 0) return std::nullopt;
    return static_cast<LazyElement>(x);
  };
  return side;
}

}  // namespace chromafun
