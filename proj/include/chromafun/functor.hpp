#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromafun/chromatic.hpp"
#include "chromafun/graph.hpp"
#include "chromafun/partitions.hpp"

namespace chromafun {

inline constexpr long long kDefaultColoringBudget = 10'000'000;

/// chi(G, [n]): every proper map V -> [n], in lexicographic order.
class ColoringSet {
 public:
  ColoringSet() = default;
  ColoringSet(FiniteGraph graph, int color_count, std::vector<Coloring> colorings)
      : graph_(std::move(graph)),
        color_count_(color_count),
        colorings_(std::move(colorings)) {}

  const FiniteGraph& graph() const { return graph_; }
  int color_count() const { return color_count_; }
  std::size_t size() const { return colorings_.size(); }
  const Coloring& operator[](std::size_t i) const { return colorings_[i]; }
  const std::vector<Coloring>& colorings() const { return colorings_; }

  /// Index of a coloring in the lexicographic enumeration.
  int index_of(const Coloring& c) const {
    auto it = std::lower_bound(colorings_.begin(), colorings_.end(), c);
    if (it == colorings_.end() || *it != c) {
      throw precondition_error("coloring is not a member of the coloring set");
    }
    return static_cast<int>(it - colorings_.begin());
  }

  bool contains(const Coloring& c) const {
    return std::binary_search(colorings_.begin(), colorings_.end(), c);
  }

 private:
  FiniteGraph graph_;
  int color_count_ = 0;
  std::vector<Coloring> colorings_;
};

inline ColoringSet enumerate_colorings(const FiniteGraph& g, int color_count,
                                       long long budget = kDefaultColoringBudget) {
  if (color_count < 0) throw precondition_error("negative color count");
  const int n = g.vertex_count();
  std::vector<Coloring> out;
  Coloring current(n, 0);
  auto extend = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (static_cast<long long>(out.size()) >= budget) {
        throw resource_error("coloring budget " + std::to_string(budget) + " exceeded");
      }
      out.push_back(current);
      return;
    }
    for (int color = 0; color < color_count; ++color) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && current[w] == color) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      current[v] = color;
      self(self, v + 1);
    }
  };
  extend(extend, 0);
  return ColoringSet(g, color_count, std::move(out));
}

/// Post-composition with a color injection (covariant direction).
inline Coloring pushforward(const Injection& f, const Coloring& c) {
  Coloring out(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (c[v] < 0 || c[v] >= f.source_size) {
      throw precondition_error("coloring uses a color outside the injection's domain");
    }
    out[v] = f.map[c[v]];
  }
  return out;
}

/// Pre-composition with a graph homomorphism (contravariant direction).
inline Coloring pullback(const GraphHom& phi, const Coloring& target_coloring) {
  if (!validate_hom(phi)) throw precondition_error("invalid homomorphism");
  if (!is_proper_coloring(phi.target, target_coloring)) {
    throw precondition_error("coloring is not proper on the target graph");
  }
  Coloring out(phi.source.vertex_count());
  for (int v = 0; v < phi.source.vertex_count(); ++v) {
    out[v] = target_coloring[phi.map[v]];
  }
  return out;
}

/// chi(G, [n]) and Hom(G, K_n) are the same data.
inline GraphHom coloring_to_hom(const FiniteGraph& g, const Coloring& c, int color_count) {
  if (!is_proper_coloring(g, c)) throw precondition_error("coloring is not proper");
  for (int color : c) {
    if (color < 0 || color >= color_count) {
      throw precondition_error("color out of range");
    }
  }
  return GraphHom{g, complete_graph(color_count), c};
}

inline Coloring hom_to_coloring(const GraphHom& h) {
  if (h.target != complete_graph(h.target.vertex_count())) {
    throw precondition_error("homomorphism target is not a complete graph");
  }
  if (!validate_hom(h)) throw precondition_error("invalid homomorphism");
  return h.map;
}

/// An isomorphism of chromatic functors between two chromatically equivalent
/// graphs.  Only the finite kernel is stored: for each block count k, a
/// matching between the deterministic enumerations of St_k(g1) and St_k(g2).
/// The component r_X at any color set is computed on demand from it.
class NaturalBijection {
 public:
  NaturalBijection(FiniteGraph g1, FiniteGraph g2,
                   std::vector<StablePartition> partitions1,
                   std::vector<StablePartition> partitions2,
                   std::map<int, std::vector<int>> matching)
      : g1_(std::move(g1)), g2_(std::move(g2)), matching_(std::move(matching)) {
    index_partitions(partitions1, by_k1_, position1_);
    index_partitions(partitions2, by_k2_, position2_);
  }

  const FiniteGraph& g1() const { return g1_; }
  const FiniteGraph& g2() const { return g2_; }
  const std::map<int, std::vector<int>>& matching() const { return matching_; }

  /// r_[n] applied to one proper coloring of g1.
  Coloring apply(int color_count, const Coloring& c) const {
    auto [p, inj] = decompose_coloring(g1_, c, color_count);
    const int k = p.block_count();
    auto pos = position1_.find(p.rgs());
    if (pos == position1_.end()) {
      throw precondition_error("internal: partition missing from enumeration");
    }
    const auto& match = matching_.at(k);
    const StablePartition& partner = by_k2_.at(k)[match[pos->second]];
    return recompose_coloring(g2_, partner, inj);
  }

  /// Inverse component, g2 -> g1.
  Coloring apply_inverse(int color_count, const Coloring& c) const {
    auto [p, inj] = decompose_coloring(g2_, c, color_count);
    const int k = p.block_count();
    auto pos = position2_.find(p.rgs());
    if (pos == position2_.end()) {
      throw precondition_error("internal: partition missing from enumeration");
    }
    const auto& match = matching_.at(k);
    auto it = std::find(match.begin(), match.end(), pos->second);
    if (it == match.end()) {
      throw precondition_error("internal: matching is not a bijection");
    }
    const StablePartition& partner = by_k1_.at(k)[it - match.begin()];
    return recompose_coloring(g1_, partner, inj);
  }

 private:
  static void index_partitions(const std::vector<StablePartition>& all,
                               std::map<int, std::vector<StablePartition>>& by_k,
                               std::map<std::vector<int>, int>& position) {
    for (const auto& p : all) {
      auto& bucket = by_k[p.block_count()];
      position[p.rgs()] = static_cast<int>(bucket.size());
      bucket.push_back(p);
    }
  }

  FiniteGraph g1_;
  FiniteGraph g2_;
  std::map<int, std::vector<int>> matching_;
  std::map<int, std::vector<StablePartition>> by_k1_, by_k2_;
  std::map<std::vector<int>, int> position1_, position2_;
};

/// Builds the order-matching natural bijection between two chromatically
/// equivalent graphs.  Fails with the first differing St_k otherwise.
inline NaturalBijection build_natural_bijection(const FiniteGraph& g1,
                                                const FiniteGraph& g2,
                                                int partition_limit = kDefaultPartitionLimit) {
  auto partitions1 = enumerate_stable_partitions(g1, partition_limit);
  auto partitions2 = enumerate_stable_partitions(g2, partition_limit);
  StVector st1, st2;
  for (const auto& p : partitions1) st1.set(p.block_count(), st1.at(p.block_count()) + 1);
  for (const auto& p : partitions2) st2.set(p.block_count(), st2.at(p.block_count()) + 1);
  if (st1 != st2) {
    int bad = 0;
    int upper = std::max(st1.max_block_count(), st2.max_block_count());
    for (int k = 0; k <= upper; ++k) {
      if (st1.at(k) != st2.at(k)) {
        bad = k;
        break;
      }
    }
    throw precondition_error("graphs are not chromatically equivalent: #St_" +
                             std::to_string(bad) + " differs (" + st1.at(bad).str() +
                             " vs " + st2.at(bad).str() + ")");
  }
  std::map<int, std::vector<int>> matching;
  for (const auto& [k, count] : st1.counts) {
    std::vector<int> order(count.convert_to<std::size_t>());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    matching[k] = std::move(order);
  }
  return NaturalBijection(g1, g2, std::move(partitions1), std::move(partitions2),
                          std::move(matching));
}

/// A family of coloring bijections indexed by color count, as used by the
/// naturality checker; (n, c) |-> r_[n](c).
using ColoringFamily = std::function<Coloring(int, const Coloring&)>;

inline ColoringFamily family_of(const NaturalBijection& bijection) {
  return [&bijection](int n, const Coloring& c) { return bijection.apply(n, c); };
}

/// Checks the naturality square for one injection f: [k] -> [m], elementwise
/// over all of chi(g1, [k]).  Exhaustive by design: callers wanting a larger
/// color count than the budget allows get a resource error, never sampling.
inline bool verify_naturality(const FiniteGraph& g1, const ColoringFamily& family,
                              const Injection& f,
                              long long budget = kDefaultColoringBudget) {
  const ColoringSet domain = enumerate_colorings(g1, f.source_size, budget);
  for (const auto& c : domain.colorings()) {
    Coloring via_push = family(f.target_size, pushforward(f, c));
    Coloring via_family = pushforward(f, family(f.source_size, c));
    if (via_push != via_family) return false;
  }
  return true;
}

inline bool verify_naturality(const NaturalBijection& bijection, const Injection& f,
                              long long budget = kDefaultColoringBudget) {
  return verify_naturality(bijection.g1(), family_of(bijection), f, budget);
}

/// Enumerates every injection [k] -> [m] in lexicographic order.
template <typename Fn>
void for_each_injection(int k, int m, Fn&& fn) {
  if (k > m) return;
  std::vector<int> map(k);
  std::vector<char> used(m, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      fn(Injection(k, m, map));
      return;
    }
    for (int image = 0; image < m; ++image) {
      if (used[image]) continue;
      used[image] = 1;
      map[i] = image;
      self(self, i + 1);
      used[image] = 0;
    }
  };
  rec(rec, 0);
}

/// Naturality against every injection [k] -> [m] with k <= m <= max_colors,
/// plus bijectivity of every component r_[m].
inline bool verify_naturality_through(const FiniteGraph& g1, const FiniteGraph& g2,
                                      const ColoringFamily& family, int max_colors,
                                      long long budget = kDefaultColoringBudget) {
  for (int m = 0; m <= max_colors; ++m) {
    const ColoringSet from = enumerate_colorings(g1, m, budget);
    const ColoringSet to = enumerate_colorings(g2, m, budget);
    if (from.size() != to.size()) return false;
    std::set<Coloring> image;
    for (const auto& c : from.colorings()) {
      Coloring r = family(m, c);
      if (!to.contains(r)) return false;
      image.insert(std::move(r));
    }
    if (image.size() != from.size()) return false;
  }
  for (int m = 1; m <= max_colors; ++m) {
    for (int k = 1; k <= m; ++k) {
      bool ok = true;
      for_each_injection(k, m, [&](const Injection& f) {
        if (ok && !verify_naturality(g1, family, f, budget)) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

inline bool verify_naturality_through(const NaturalBijection& bijection, int max_colors,
                                      long long budget = kDefaultColoringBudget) {
  return verify_naturality_through(bijection.g1(), bijection.g2(), family_of(bijection),
                                   max_colors, budget);
}

/// Multiset of block counts of a partition family; the canonical invariant of
/// the associated disjoint union of complete-graph functors.
inline std::multiset<int> block_size_multiset(const std::vector<Partition>& family) {
  std::multiset<int> out;
  for (const auto& p : family) out.insert(p.block_count());
  return out;
}

/// Eq-style decomposition chi(G,.) = disjoint union over k of
/// chi(K_k,.)^{#St_k(G)}, reported as (k, multiplicity) pairs.
inline std::vector<std::pair<int, BigInt>> functor_decomposition(
    const FiniteGraph& g, int partition_limit = kDefaultPartitionLimit) {
  StVector st = st_counts(g, partition_limit);
  std::vector<std::pair<int, BigInt>> out(st.counts.begin(), st.counts.end());
  return out;
}

struct YonedaResult {
  std::vector<int> bijection;  // beta: vertices of K_b -> colors [a]
  bool certified = false;
};

/// Extracts the underlying bijection from a natural family of bijections
/// chi(K_a, .) -> chi(K_b, .), given as index maps against the lexicographic
/// coloring enumerations for n = 1..bound.  components[n-1] is the component
/// at [n].  Requires a = b (complete graphs of different sizes admit no
/// isomorphism of functors) and a <= bound.
inline YonedaResult yoneda_extract(int a, int b,
                                   const std::vector<std::vector<int>>& components,
                                   int bound,
                                   long long budget = kDefaultColoringBudget) {
  if (a != b) {
    throw precondition_error(
        "no bijection can exist between complete graphs of different sizes");
  }
  if (a < 1 || a > bound) {
    throw precondition_error("need 1 <= a <= bound to evaluate at the identity coloring");
  }
  if (static_cast<int>(components.size()) < bound) {
    throw precondition_error("family does not reach the stated bound");
  }
  const FiniteGraph ka = complete_graph(a);
  std::vector<ColoringSet> sets_a, sets_b;
  for (int n = 1; n <= bound; ++n) {
    sets_a.push_back(enumerate_colorings(ka, n, budget));
    sets_b.push_back(enumerate_colorings(ka, n, budget));
    if (components[n - 1].size() != sets_a.back().size()) {
      throw precondition_error("component size mismatch at n=" + std::to_string(n));
    }
  }

  Coloring identity(a);
  for (int v = 0; v < a; ++v) identity[v] = v;
  int id_index = sets_a[a - 1].index_of(identity);
  YonedaResult result;
  result.bijection = sets_b[a - 1][components[a - 1][id_index]];

  std::vector<char> seen(a, 0);
  for (int image : result.bijection) {
    if (image < 0 || image >= a || seen[image]) return result;  // not a bijection
    seen[image] = 1;
  }

  // Certify r_[n](c) = c o beta for every component in range.
  for (int n = 1; n <= bound; ++n) {
    for (std::size_t i = 0; i < sets_a[n - 1].size(); ++i) {
      const Coloring& c = sets_a[n - 1][i];
      const Coloring& mapped = sets_b[n - 1][components[n - 1][i]];
      for (int v = 0; v < a; ++v) {
        if (mapped[v] != c[result.bijection[v]]) return result;
      }
    }
  }
  result.certified = true;
  return result;
}

// ---------------------------------------------------------------------------
// Exhaustive search for a natural family of bijections at a bounded color
// count.  Used to verify, at desk scale, that partition data controls
// functor isomorphism (uniqueness of stable partitions).

namespace detail {

struct FamilySearch {
  const std::vector<ColoringSet>* sets1;
  const std::vector<ColoringSet>* sets2;
  std::vector<std::vector<int>> assignment;  // per n, image index or -1
  std::vector<std::vector<char>> taken;      // per n, image used
};

// Propagates naturality along every injection [k] -> [m] (k < m <= bound)
// from fully assigned levels; returns false on contradiction.
inline bool propagate_family(FamilySearch& search, int bound) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 2; m <= bound; ++m) {
      for (int k = 1; k < m; ++k) {
        bool contradiction = false;
        for_each_injection(k, m, [&](const Injection& f) {
          if (contradiction) return;
          const auto& from_k = (*search.sets1)[k - 1];
          const auto& to_k = (*search.sets2)[k - 1];
          const auto& from_m = (*search.sets1)[m - 1];
          const auto& to_m = (*search.sets2)[m - 1];
          for (std::size_t i = 0; i < from_k.size(); ++i) {
            int rk = search.assignment[k - 1][i];
            if (rk < 0) continue;
            int lhs = from_m.index_of(pushforward(f, from_k[i]));
            int rhs = to_m.index_of(pushforward(f, to_k[rk]));
            int existing = search.assignment[m - 1][lhs];
            if (existing == -1) {
              if (search.taken[m - 1][rhs]) {
                contradiction = true;
                return;
              }
              search.assignment[m - 1][lhs] = rhs;
              search.taken[m - 1][rhs] = 1;
              changed = true;
            } else if (existing != rhs) {
              contradiction = true;
              return;
            }
          }
        });
        if (contradiction) return false;
      }
    }
    // Equivariance under permutations of [n] (injections with k = m).
    for (int m = 1; m <= bound; ++m) {
      bool contradiction = false;
      for_each_injection(m, m, [&](const Injection& f) {
        if (contradiction) return;
        const auto& from = (*search.sets1)[m - 1];
        const auto& to = (*search.sets2)[m - 1];
        for (std::size_t i = 0; i < from.size(); ++i) {
          int r = search.assignment[m - 1][i];
          if (r < 0) continue;
          int lhs = from.index_of(pushforward(f, from[i]));
          int rhs = to.index_of(pushforward(f, to[r]));
          int existing = search.assignment[m - 1][lhs];
          if (existing == -1) {
            if (search.taken[m - 1][rhs]) {
              contradiction = true;
              return;
            }
            search.assignment[m - 1][lhs] = rhs;
            search.taken[m - 1][rhs] = 1;
            changed = true;
          } else if (existing != rhs) {
            contradiction = true;
            return;
          }
        }
      });
      if (contradiction) return false;
    }
  }
  return true;
}

inline bool search_family(FamilySearch& search, int bound, long long& nodes,
                          long long node_limit) {
  if (++nodes > node_limit) {
    throw resource_error("natural-family search exceeded its node limit");
  }
  // Propagated deductions are forced, so they are kept even across branches.
  if (!propagate_family(search, bound)) return false;
  for (int n = 1; n <= bound; ++n) {
    auto& level = search.assignment[n - 1];
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (level[i] != -1) continue;
      for (std::size_t candidate = 0; candidate < search.taken[n - 1].size();
           ++candidate) {
        if (search.taken[n - 1][candidate]) continue;
        FamilySearch branch = search;
        branch.assignment[n - 1][i] = static_cast<int>(candidate);
        branch.taken[n - 1][candidate] = 1;
        if (search_family(branch, bound, nodes, node_limit)) {
          search = std::move(branch);
          return true;
        }
      }
      return false;  // the first unassigned coloring admits no image
    }
  }
  return true;  // fully assigned and consistent
}

}  // namespace detail

/// Searches exhaustively for a family of bijections r_[n] (1 <= n <= bound)
/// commuting with every injection between color sets of size <= bound.
/// Returns the per-level index maps if one exists.
inline std::optional<std::vector<std::vector<int>>> find_natural_family(
    const FiniteGraph& g1, const FiniteGraph& g2, int bound,
    long long budget = kDefaultColoringBudget, long long node_limit = 2'000'000) {
  std::vector<ColoringSet> sets1, sets2;
  for (int n = 1; n <= bound; ++n) {
    sets1.push_back(enumerate_colorings(g1, n, budget));
    sets2.push_back(enumerate_colorings(g2, n, budget));
    if (sets1.back().size() != sets2.back().size()) return std::nullopt;
  }
  detail::FamilySearch search;
  search.sets1 = &sets1;
  search.sets2 = &sets2;
  for (int n = 1; n <= bound; ++n) {
    search.assignment.emplace_back(sets1[n - 1].size(), -1);
    search.taken.emplace_back(sets2[n - 1].size(), 0);
  }
  long long nodes = 0;
  if (!detail::search_family(search, bound, nodes, node_limit)) return std::nullopt;
  return search.assignment;
}

}  // namespace chromafun
