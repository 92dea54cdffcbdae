#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chromafun/functor.hpp"
#include "chromafun/generators.hpp"
#include "chromafun/graph.hpp"
#include "chromafun/partitions.hpp"
#include "chromafun/polynomial.hpp"

namespace chromafun {

inline constexpr long long kDefaultTransferBudget = 1'000'000;
inline constexpr int kDefaultProbeBound = 200;

// ---------------------------------------------------------------------------
// Countable graph families.

/// Finite description of a periodic countable graph: one cell of cell_size
/// vertices repeated along N (one-way) or Z (two-way), with intra-cell edges
/// and directed inter-cell edges (u in cell t, v in cell t+1).  A one-way
/// strip may carry a finite head graph glued before cell 0; glue edges are
/// the inter pairs (u, v) with u inside the head's vertex range.
struct StripSpec {
  int cell_size = 1;
  std::vector<std::pair<int, int>> intra;
  std::vector<std::pair<int, int>> inter;
  bool two_way = false;
  std::optional<FiniteGraph> head;

  void validate() const {
    if (cell_size < 1) throw precondition_error("cell_size must be at least 1");
    for (auto [u, v] : intra) {
      if (u < 0 || v < 0 || u >= cell_size || v >= cell_size || u == v) {
        throw precondition_error("intra edge out of range or a self-loop");
      }
    }
    for (auto [u, v] : inter) {
      if (u < 0 || v < 0 || u >= cell_size || v >= cell_size) {
        throw precondition_error("inter edge out of range");
      }
    }
    if (head && two_way) {
      throw precondition_error("a head graph is only meaningful on one-way strips");
    }
  }

  FiniteGraph cell_graph() const {
    std::vector<Edge> edges(intra.begin(), intra.end());
    return FiniteGraph(cell_size, std::move(edges));
  }

  int head_size() const { return head ? head->vertex_count() : 0; }
};

struct NaturalWheelGraph {};      // star with center 0 and spokes 1, 2, ...
struct CompleteMinusEdgeGraph {}; // countable complete graph minus the edge {0,1}

using CountableGraph = std::variant<StripSpec, NaturalWheelGraph, CompleteMinusEdgeGraph>;

inline StripSpec natural_tree_strip() {
  StripSpec s;
  s.cell_size = 1;
  s.inter = {{0, 0}};
  return s;
}

inline StripSpec natural_tree_two_way_strip() {
  StripSpec s = natural_tree_strip();
  s.two_way = true;
  return s;
}

/// One-way triangular ladder: bottom rail, verticals, diagonals (no top rail).
/// Cell vertex 0 is the bottom vertex b_k, vertex 1 the top vertex above
/// b_{k+1}; the drawn graph starts at b_0, so no head is needed.
inline StripSpec fig3_g1_strip() {
  StripSpec s;
  s.cell_size = 2;
  s.intra = {{0, 1}};
  s.inter = {{0, 0}, {1, 0}};
  return s;
}

/// fig3_g1 plus the top rail.
inline StripSpec fig3_g2_strip() {
  StripSpec s = fig3_g1_strip();
  s.inter.push_back({1, 1});
  return s;
}

/// Two-way grid of height 4 with verticals, horizontals, and one diagonal
/// per square (row r of cell t joined to row r+1 of cell t+1).
inline StripSpec fig3_g3_strip() {
  StripSpec s;
  s.cell_size = 4;
  s.intra = {{0, 1}, {1, 2}, {2, 3}};
  s.inter = {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 3}};
  s.two_way = true;
  return s;
}

inline CountableGraph fixture_by_name(const std::string& name) {
  if (name == "natural-tree") return natural_tree_strip();
  if (name == "natural-tree-two-way") return natural_tree_two_way_strip();
  if (name == "natural-wheel") return NaturalWheelGraph{};
  if (name == "fig3-g1") return fig3_g1_strip();
  if (name == "fig3-g2") return fig3_g2_strip();
  if (name == "fig3-g3") return fig3_g3_strip();
  if (name == "complete-minus-edge") return CompleteMinusEdgeGraph{};
  throw precondition_error("unknown fixture name: " + name);
}

// ---------------------------------------------------------------------------
// Vertex enumeration.  Every countable family enumerates its vertices by
// ids 0, 1, 2, ...; strips place cell t at block index 0,1,2,... (one-way)
// or in zigzag order 0, -1, 1, -2, 2, ... (two-way), after the head.

using VertexId = std::uint64_t;

struct StripVertex {
  bool in_head = false;
  int head_vertex = 0;
  long long cell = 0;
  int local = 0;
};

inline StripVertex strip_vertex_of_id(const StripSpec& s, VertexId id) {
  StripVertex out;
  long long rest = static_cast<long long>(id);
  if (!s.two_way) {
    if (rest < s.head_size()) {
      out.in_head = true;
      out.head_vertex = static_cast<int>(rest);
      return out;
    }
    rest -= s.head_size();
    out.cell = rest / s.cell_size;
    out.local = static_cast<int>(rest % s.cell_size);
    return out;
  }
  long long block = rest / s.cell_size;
  out.local = static_cast<int>(rest % s.cell_size);
  out.cell = (block % 2 == 0) ? block / 2 : -(block + 1) / 2;
  return out;
}

inline VertexId strip_id_of_vertex(const StripSpec& s, long long cell, int local) {
  if (!s.two_way) {
    if (cell < 0) throw precondition_error("one-way strips have no negative cells");
    return static_cast<VertexId>(s.head_size() + cell * s.cell_size + local);
  }
  long long block = cell >= 0 ? 2 * cell : -2 * cell - 1;
  return static_cast<VertexId>(block * s.cell_size + local);
}

inline bool strip_adjacent(const StripSpec& s, VertexId a, VertexId b) {
  if (a == b) return false;
  StripVertex va = strip_vertex_of_id(s, a);
  StripVertex vb = strip_vertex_of_id(s, b);
  if (va.in_head && vb.in_head) return s.head->has_edge(va.head_vertex, vb.head_vertex);
  if (va.in_head || vb.in_head) {
    const StripVertex& h = va.in_head ? va : vb;
    const StripVertex& c = va.in_head ? vb : va;
    if (c.cell != 0) return false;
    for (auto [u, v] : s.inter) {
      if (u == h.head_vertex && u < s.head_size() && v == c.local) return true;
    }
    return false;
  }
  if (va.cell == vb.cell) {
    for (auto [u, v] : s.intra) {
      if ((u == va.local && v == vb.local) || (u == vb.local && v == va.local)) return true;
    }
    return false;
  }
  const StripVertex* left = &va;
  const StripVertex* right = &vb;
  if (left->cell > right->cell) std::swap(left, right);
  if (right->cell - left->cell != 1) return false;
  for (auto [u, v] : s.inter) {
    if (u == left->local && v == right->local) return true;
  }
  return false;
}

inline bool countable_adjacent(const CountableGraph& g, VertexId a, VertexId b) {
  if (a == b) return false;
  if (const auto* s = std::get_if<StripSpec>(&g)) return strip_adjacent(*s, a, b);
  if (std::holds_alternative<NaturalWheelGraph>(g)) {
    return a == 0 || b == 0;  // and a != b
  }
  // Complete minus the edge {0,1}.
  return !((a == 0 && b == 1) || (a == 1 && b == 0));
}

/// Finite truncation: the head plus cells 0..cells-1 (one-way) or any
/// window of `cells` consecutive cells (two-way; shift-invariant).
inline FiniteGraph unroll_truncation(const StripSpec& s, int cells) {
  s.validate();
  const int head_n = s.two_way ? 0 : s.head_size();
  const int n = head_n + cells * s.cell_size;
  std::vector<Edge> edges;
  if (head_n > 0) {
    for (const auto& [u, v] : s.head->edges()) edges.emplace_back(u, v);
    if (cells > 0) {
      for (auto [u, v] : s.inter) {
        if (u < head_n) edges.emplace_back(u, head_n + v);
      }
    }
  }
  for (int t = 0; t < cells; ++t) {
    const int base = head_n + t * s.cell_size;
    for (auto [u, v] : s.intra) edges.emplace_back(base + u, base + v);
    if (t + 1 < cells) {
      for (auto [u, v] : s.inter) {
        edges.emplace_back(base + u, base + s.cell_size + v);
      }
    }
  }
  return FiniteGraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Transfer digraph.

/// States are the proper [n]-colorings of one cell; an arc a -> b says the
/// pair is consistent across the inter-cell edges.  Infinite paths (N- or
/// Z-indexed) correspond bijectively to proper colorings of the strip.
struct TransferDigraph {
  int color_count = 0;
  std::vector<Coloring> states;            // lexicographic order
  std::vector<std::vector<int>> out;       // arcs
  std::vector<BigInt> start_weights;       // one-way: compatible head colorings
};

inline TransferDigraph build_transfer_digraph(const StripSpec& s, int n,
                                              long long budget = kDefaultTransferBudget) {
  s.validate();
  double state_bound = 1;
  for (int i = 0; i < s.cell_size; ++i) {
    state_bound *= std::max(n, 1);
    if (state_bound > static_cast<double>(budget)) {
      throw resource_error("transfer state budget exceeded");
    }
  }
  TransferDigraph d;
  d.color_count = n;
  d.states = enumerate_colorings(s.cell_graph(), n, budget).colorings();
  const int count = static_cast<int>(d.states.size());
  if (static_cast<long long>(count) * count > 50'000'000) {
    throw resource_error("transfer arc budget exceeded");
  }
  d.out.assign(count, {});
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      bool ok = true;
      for (auto [u, v] : s.inter) {
        if (d.states[a][u] == d.states[b][v]) {
          ok = false;
          break;
        }
      }
      if (ok) d.out[a].push_back(b);
    }
  }
  d.start_weights.assign(count, 1);
  if (!s.two_way && s.head) {
    const auto head_colorings = enumerate_colorings(*s.head, n, budget);
    d.start_weights.assign(count, 0);
    for (const auto& h : head_colorings.colorings()) {
      for (int b = 0; b < count; ++b) {
        bool ok = true;
        for (auto [u, v] : s.inter) {
          if (u < s.head_size() && h[u] == d.states[b][v]) {
            ok = false;
            break;
          }
        }
        if (ok) d.start_weights[b] += 1;
      }
    }
  }
  return d;
}

/// Number of walks with `length` states, weighted by start multiplicities;
/// equals the number of proper colorings of the length-`length` truncation.
inline BigInt transfer_path_count(const TransferDigraph& d, int length) {
  if (length <= 0) return 1;
  std::vector<BigInt> walks(d.states.size(), 1);
  for (int step = 1; step < length; ++step) {
    std::vector<BigInt> next(d.states.size(), 0);
    for (std::size_t a = 0; a < d.states.size(); ++a) {
      for (int b : d.out[a]) next[a] += walks[b];
    }
    walks = std::move(next);
  }
  BigInt total = 0;
  for (std::size_t a = 0; a < d.states.size(); ++a) {
    total += d.start_weights[a] * walks[a];
  }
  return total;
}

// ---------------------------------------------------------------------------
// Cardinality of coloring sets: exact finite counts, aleph_0, or 2^aleph_0.

struct Cardinality {
  enum class Kind { Finite, Aleph0, Continuum };
  Kind kind = Kind::Finite;
  BigInt count = 0;

  static Cardinality finite(BigInt c) { return {Kind::Finite, std::move(c)}; }
  static Cardinality aleph0() { return {Kind::Aleph0, 0}; }
  static Cardinality continuum() { return {Kind::Continuum, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }

  bool operator==(const Cardinality& other) const {
    return kind == other.kind && (kind != Kind::Finite || count == other.count);
  }
  bool operator!=(const Cardinality& other) const { return !(*this == other); }

  std::string to_string() const {
    switch (kind) {
      case Kind::Finite:
        return count.str();
      case Kind::Aleph0:
        return "aleph0";
      default:
        return "continuum";
    }
  }
};

struct PruneResult {
  std::vector<char> alive;
  int rounds = 0;  // removal sweeps until the fixpoint
};

/// Removes states with no live successor until stable (states that admit an
/// infinite forward continuation survive).
inline PruneResult prune_forward(const std::vector<std::vector<int>>& out) {
  PruneResult r;
  r.alive.assign(out.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (!r.alive[a]) continue;
      bool has_successor = false;
      for (int b : out[a]) {
        if (r.alive[b]) {
          has_successor = true;
          break;
        }
      }
      if (!has_successor) {
        r.alive[a] = 0;
        changed = true;
      }
    }
    ++r.rounds;
  }
  return r;
}

/// Keeps states with both a live successor and a live predecessor (states on
/// bi-infinite walks).
inline PruneResult prune_bidirectional(const std::vector<std::vector<int>>& out) {
  PruneResult r;
  r.alive.assign(out.size(), 1);
  std::vector<std::vector<int>> in(out.size());
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (int b : out[a]) in[b].push_back(static_cast<int>(a));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < out.size(); ++a) {
      if (!r.alive[a]) continue;
      auto any_alive = [&](const std::vector<int>& list) {
        return std::any_of(list.begin(), list.end(),
                           [&](int b) { return r.alive[b] != 0; });
      };
      if (!any_alive(out[a]) || !any_alive(in[a])) {
        r.alive[a] = 0;
        changed = true;
      }
    }
    ++r.rounds;
  }
  return r;
}

namespace detail {

/// Iterative Tarjan restricted to `mask`; returns component ids (-1 outside
/// the mask), components numbered in reverse topological order of discovery.
inline std::vector<int> scc_components(const std::vector<std::vector<int>>& out,
                                       const std::vector<char>& mask, int& component_count) {
  const int n = static_cast<int>(out.size());
  std::vector<int> comp(n, -1), index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  component_count = 0;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (!mask[root] || index[root] >= 0) continue;
    std::vector<Frame> call_stack{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.edge < out[frame.v].size()) {
        int w = out[frame.v][frame.edge++];
        if (!mask[w]) continue;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call_stack.push_back({w, 0});
        } else if (on_stack[w]) {
          low[frame.v] = std::min(low[frame.v], index[w]);
        }
      } else {
        int v = frame.v;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          low[call_stack.back().v] = std::min(low[call_stack.back().v], low[v]);
        }
        if (low[v] == index[v]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            comp[w] = component_count;
            if (w == v) break;
          }
          ++component_count;
        }
      }
    }
  }
  return comp;
}

struct DigraphAnalysis {
  std::vector<char> alive;
  std::vector<char> reachable;  // from positive-weight alive starts (one-way)
  std::vector<int> comp;
  int component_count = 0;
  std::vector<char> comp_cyclic;     // SCC has a cycle (size >= 2 or self-loop)
  std::vector<char> comp_branching;  // some member has two distinct in-SCC arcs
  std::vector<char> comp_has_exit;   // arc to a live state outside the SCC
};

inline DigraphAnalysis analyze(const std::vector<std::vector<int>>& out,
                               const std::vector<char>& alive,
                               const std::vector<char>& relevant) {
  DigraphAnalysis a;
  a.alive = alive;
  a.reachable = relevant;
  std::vector<char> mask(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) mask[i] = alive[i] && relevant[i];
  a.comp = scc_components(out, mask, a.component_count);
  a.comp_cyclic.assign(a.component_count, 0);
  a.comp_branching.assign(a.component_count, 0);
  a.comp_has_exit.assign(a.component_count, 0);
  std::vector<int> comp_size(a.component_count, 0);
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (a.comp[v] >= 0) ++comp_size[a.comp[v]];
  }
  for (std::size_t v = 0; v < out.size(); ++v) {
    int c = a.comp[v];
    if (c < 0) continue;
    int in_scc_arcs = 0;
    for (int w : out[v]) {
      if (a.comp[w] == c) {
        ++in_scc_arcs;
        if (comp_size[c] >= 2 || w == static_cast<int>(v)) a.comp_cyclic[c] = 1;
      } else if (a.comp[w] >= 0) {
        a.comp_has_exit[c] = 1;
      }
    }
    if (in_scc_arcs >= 2) a.comp_branching[c] = 1;
  }
  return a;
}

}  // namespace detail

/// Classifies the set of N-indexed infinite walks from the weighted starts.
inline Cardinality classify_one_way(const std::vector<std::vector<int>>& out,
                                    const std::vector<BigInt>& start_weights) {
  PruneResult pruned = prune_forward(out);
  std::vector<char> reachable(out.size(), 0);
  std::queue<int> queue;
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (pruned.alive[s] && start_weights[s] > 0) {
      reachable[s] = 1;
      queue.push(static_cast<int>(s));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : out[v]) {
      if (pruned.alive[w] && !reachable[w]) {
        reachable[w] = 1;
        queue.push(w);
      }
    }
  }
  detail::DigraphAnalysis a = detail::analyze(out, pruned.alive, reachable);
  if (a.component_count == 0) return Cardinality::finite(0);
  for (int c = 0; c < a.component_count; ++c) {
    if (a.comp_cyclic[c] && a.comp_branching[c]) return Cardinality::continuum();
  }
  for (int c = 0; c < a.component_count; ++c) {
    if (a.comp_cyclic[c] && a.comp_has_exit[c]) return Cardinality::aleph0();
  }
  // Transient DAG into terminal simple cycles: exact count.
  std::vector<std::optional<BigInt>> memo(out.size());
  auto walks_from = [&](auto&& self, int v) -> BigInt {
    if (memo[v]) return *memo[v];
    BigInt total = 0;
    if (a.comp_cyclic[a.comp[v]]) {
      total = 1;  // forced around the terminal cycle
    } else {
      for (int w : out[v]) {
        if (a.comp[w] >= 0) total += self(self, w);
      }
    }
    memo[v] = total;
    return total;
  };
  BigInt total = 0;
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (a.comp[s] >= 0 && start_weights[s] > 0) {
      total += start_weights[s] * walks_from(walks_from, static_cast<int>(s));
    }
  }
  return Cardinality::finite(total);
}

/// Classifies the set of Z-indexed bi-infinite walks.
inline Cardinality classify_two_way(const std::vector<std::vector<int>>& out) {
  PruneResult pruned = prune_bidirectional(out);
  std::vector<char> relevant(out.size(), 1);
  detail::DigraphAnalysis a = detail::analyze(out, pruned.alive, relevant);
  bool any = false;
  for (std::size_t v = 0; v < out.size(); ++v) any = any || a.comp[v] >= 0;
  if (!any) return Cardinality::finite(0);
  for (int c = 0; c < a.component_count; ++c) {
    if (a.comp_cyclic[c] && a.comp_branching[c]) return Cardinality::continuum();
  }
  for (int c = 0; c < a.component_count; ++c) {
    if (a.comp_has_exit[c]) return Cardinality::aleph0();
  }
  // Disjoint simple cycles; each of length L yields L phase-distinct
  // Z-sequences.
  BigInt total = 0;
  for (std::size_t v = 0; v < out.size(); ++v) {
    if (a.comp[v] >= 0) total += 1;
  }
  return Cardinality::finite(total);
}

inline Cardinality count_strip_colorings(const StripSpec& s, int n,
                                         long long budget = kDefaultTransferBudget) {
  TransferDigraph d = build_transfer_digraph(s, n, budget);
  if (s.two_way) return classify_two_way(d.out);
  return classify_one_way(d.out, d.start_weights);
}

inline Cardinality count_colorings(const CountableGraph& g, int n,
                                   long long budget = kDefaultTransferBudget) {
  if (n < 0) throw precondition_error("negative color count");
  if (const auto* s = std::get_if<StripSpec>(&g)) {
    return count_strip_colorings(*s, n, budget);
  }
  if (std::holds_alternative<NaturalWheelGraph>(g)) {
    // Center color times one constrained choice per spoke: n * (n-1)^aleph0.
    if (n <= 1) return Cardinality::finite(0);
    if (n == 2) return Cardinality::finite(2);
    return Cardinality::continuum();
  }
  // K_X minus one edge contains complete subgraphs of every finite order.
  return Cardinality::finite(0);
}

/// Least n with a nonempty coloring set; nullopt encodes an infinite
/// chromatic number (the complete-minus-edge family).
inline std::optional<int> chromatic_number_countable(const CountableGraph& g,
                                                     long long budget = kDefaultTransferBudget) {
  if (std::holds_alternative<CompleteMinusEdgeGraph>(g)) return std::nullopt;
  int degree_bound = 1;
  if (const auto* s = std::get_if<StripSpec>(&g)) {
    s->validate();
    std::vector<int> deg(s->cell_size, 0);
    for (auto [u, v] : s->intra) {
      ++deg[u];
      ++deg[v];
    }
    for (auto [u, v] : s->inter) {
      ++deg[u];
      ++deg[v];
    }
    degree_bound = *std::max_element(deg.begin(), deg.end());
    if (s->head) {
      for (int h = 0; h < s->head_size(); ++h) {
        int d = s->head->degree(h);
        for (auto [u, v] : s->inter) {
          if (u == h && u < s->head_size()) ++d;
        }
        degree_bound = std::max(degree_bound, d);
      }
    }
  } else {
    degree_bound = 1;  // the wheel is 2-colorable
  }
  for (int n = 1; n <= degree_bound + 1; ++n) {
    if (count_colorings(g, n, budget) != Cardinality::finite(0)) return n;
  }
  throw precondition_error("no coloring found within the greedy degree bound");
}

enum class CountableEquivalence { Equivalent, NotEquivalent, Inapplicable };

/// Countable graphs with the same finite chromatic number n are chromatically
/// equivalent exactly when #chi(., [n]) agree; chi = infinity is outside the
/// theorem's reach.
inline CountableEquivalence decide_equivalent_countable(
    const CountableGraph& g1, const CountableGraph& g2,
    long long budget = kDefaultTransferBudget) {
  auto n1 = chromatic_number_countable(g1, budget);
  auto n2 = chromatic_number_countable(g2, budget);
  if (!n1 || !n2) return CountableEquivalence::Inapplicable;
  if (*n1 != *n2) return CountableEquivalence::NotEquivalent;
  return count_colorings(g1, *n1, budget) == count_colorings(g2, *n2, budget)
             ? CountableEquivalence::Equivalent
             : CountableEquivalence::NotEquivalent;
}

/// #St_k for a countable graph with finite chromatic number n:
/// inverted from #chi(., [i]) = sum_i C(k,i) i! #St_i for k <= n, and
/// 2^aleph0 past n (splitting an infinite color class).
inline Cardinality st_cardinality(const CountableGraph& g, int k,
                                  long long budget = kDefaultTransferBudget) {
  if (k < 1) throw precondition_error("block count k must be at least 1");
  auto n = chromatic_number_countable(g, budget);
  if (!n) {
    throw precondition_error(
        "st_cardinality requires a finite chromatic number; see the K_X' report");
  }
  if (k > *n) return Cardinality::continuum();
  std::vector<Cardinality> st(k + 1, Cardinality::finite(0));
  for (int i = 1; i <= k; ++i) {
    Cardinality colorings = count_colorings(g, i, budget);
    if (!colorings.is_finite()) {
      // Coloring counts are monotone in i, so everything past this point is
      // dominated by the first infinite input.
      st[i] = colorings;
      continue;
    }
    if (i > 1 && !st[i - 1].is_finite()) {
      st[i] = st[i - 1];
      continue;
    }
    BigInt remaining = colorings.count;
    BigInt binom = 1;  // C(i, j) built incrementally
    BigInt j_factorial = 1;
    for (int j = 1; j < i; ++j) {
      binom = binom * (i - j + 1) / j;
      j_factorial *= j;
      remaining -= binom * j_factorial * st[j].count;
    }
    BigInt i_factorial = 1;
    for (int j = 2; j <= i; ++j) i_factorial *= j;
    if (remaining < 0 || remaining % i_factorial != 0) {
      throw precondition_error("coloring counts are inconsistent with the st inversion");
    }
    st[i] = Cardinality::finite(remaining / i_factorial);
  }
  return st[k];
}

/// Symbolic report for the complete graph minus one edge on an infinite
/// vertex set: its two stable partitions force a two-fold disjoint union.
struct CompleteMinusEdgeReport {
  int stable_partition_count = 2;
  std::string partition_1 = "all singletons {{x} : x in X}";
  std::string partition_2 = "singletons with {x0, x1} merged";
  std::string block_cardinalities = "#X and #X";
  std::string decomposition =
      "chi(K_X - e, .) = chi(K_X, .) + chi(K_X, .) (two-fold disjoint union)";
  bool isomorphic_to_complete = false;
};

inline CompleteMinusEdgeReport complete_minus_edge_report() { return {}; }

// ---------------------------------------------------------------------------
// Explicit witnesses behind the cardinality classification.

/// Eventually periodic coloring of a strip: optional head coloring, a finite
/// prefix of cell colorings from cell 0, then a repeating cycle.  Two-way
/// colorings also repeat the back_cycle for negative cells.
struct EventuallyPeriodicColoring {
  bool two_way = false;
  std::optional<Coloring> head_coloring;
  std::vector<Coloring> back_cycle;  // two-way only; cells t < 0
  std::vector<Coloring> prefix;      // cells 0 .. prefix.size()-1
  std::vector<Coloring> cycle;       // cells >= prefix.size()

  const Coloring& cell_coloring(long long t) const {
    if (t < 0) {
      if (!two_way || back_cycle.empty()) {
        throw precondition_error("negative cell on a one-way coloring");
      }
      long long l = static_cast<long long>(back_cycle.size());
      return back_cycle[static_cast<std::size_t>(((t % l) + l) % l)];
    }
    if (t < static_cast<long long>(prefix.size())) {
      return prefix[static_cast<std::size_t>(t)];
    }
    long long l = static_cast<long long>(cycle.size());
    return cycle[static_cast<std::size_t>((t - prefix.size()) % l)];
  }

  int color_of(const StripSpec& s, VertexId id) const {
    StripVertex v = strip_vertex_of_id(s, id);
    if (v.in_head) {
      if (!head_coloring) throw precondition_error("missing head coloring");
      return (*head_coloring)[v.head_vertex];
    }
    return cell_coloring(v.cell)[v.local];
  }
};

namespace detail {

/// Follows first out-arcs from `state` until a state repeats; splits the
/// walk into (transient tail, cycle).
inline std::pair<std::vector<int>, std::vector<int>> forced_continuation(
    const std::vector<std::vector<int>>& out, const std::vector<char>& alive, int state) {
  std::vector<int> walk;
  std::map<int, std::size_t> seen;
  int current = state;
  while (!seen.count(current)) {
    seen[current] = walk.size();
    walk.push_back(current);
    int next = -1;
    for (int w : out[current]) {
      if (alive[w]) {
        next = w;
        break;
      }
    }
    if (next < 0) throw precondition_error("state has no live continuation");
    current = next;
  }
  std::size_t start = seen[current];
  std::vector<int> tail(walk.begin(), walk.begin() + start);
  std::vector<int> cycle(walk.begin() + start, walk.end());
  return {std::move(tail), std::move(cycle)};
}

}  // namespace detail

/// All proper [n]-colorings of a strip whose coloring set is finite, as
/// eventually periodic descriptions.  Throws if the set is infinite.
inline std::vector<EventuallyPeriodicColoring> enumerate_strip_colorings(
    const StripSpec& s, int n, long long budget = kDefaultTransferBudget) {
  Cardinality total = count_strip_colorings(s, n, budget);
  if (!total.is_finite()) {
    throw precondition_error("coloring set is infinite; no finite enumeration exists");
  }
  TransferDigraph d = build_transfer_digraph(s, n, budget);
  std::vector<EventuallyPeriodicColoring> out;

  if (s.two_way) {
    PruneResult pruned = prune_bidirectional(d.out);
    std::vector<char> visited(d.states.size(), 0);
    for (std::size_t v = 0; v < d.states.size(); ++v) {
      if (!pruned.alive[v] || visited[v]) continue;
      auto [tail, cycle] = detail::forced_continuation(d.out, pruned.alive, static_cast<int>(v));
      if (!tail.empty()) {
        throw precondition_error("internal: finite two-way set with a transient state");
      }
      for (int state : cycle) visited[state] = 1;
      const std::size_t length = cycle.size();
      for (std::size_t phase = 0; phase < length; ++phase) {
        EventuallyPeriodicColoring coloring;
        coloring.two_way = true;
        for (std::size_t i = 0; i < length; ++i) {
          coloring.cycle.push_back(d.states[cycle[(i + phase) % length]]);
        }
        coloring.back_cycle = coloring.cycle;
        out.push_back(std::move(coloring));
      }
    }
    return out;
  }

  PruneResult pruned = prune_forward(d.out);
  std::vector<Coloring> head_colorings;
  if (s.head) {
    head_colorings = enumerate_colorings(*s.head, n, budget).colorings();
  }
  std::vector<char> relevant(d.states.size(), 1);
  detail::DigraphAnalysis analysis = detail::analyze(d.out, pruned.alive, relevant);

  std::vector<int> path;
  auto emit = [&](int cycle_entry) {
    auto [tail, cycle] = detail::forced_continuation(d.out, pruned.alive, cycle_entry);
    if (!tail.empty()) {
      throw precondition_error("internal: cycle entry expected");
    }
    EventuallyPeriodicColoring base;
    for (int state : path) base.prefix.push_back(d.states[state]);
    for (int state : cycle) base.cycle.push_back(d.states[state]);
    if (!s.head) {
      out.push_back(std::move(base));
      return;
    }
    int start = path.empty() ? cycle_entry : path.front();
    for (const auto& h : head_colorings) {
      bool ok = true;
      for (auto [u, v] : s.inter) {
        if (u < s.head_size() && h[u] == d.states[start][v]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      EventuallyPeriodicColoring coloring = base;
      coloring.head_coloring = h;
      out.push_back(std::move(coloring));
    }
  };
  auto explore = [&](auto&& self, int v) -> void {
    if (analysis.comp_cyclic[analysis.comp[v]]) {
      emit(v);
      return;
    }
    path.push_back(v);
    for (int w : d.out[v]) {
      if (pruned.alive[w]) self(self, w);
    }
    path.pop_back();
  };
  for (std::size_t v = 0; v < d.states.size(); ++v) {
    if (pruned.alive[v] && d.start_weights[v] > 0) {
      explore(explore, static_cast<int>(v));
    }
  }
  return out;
}

/// A state with two distinct in-SCC out-arcs, plus two explicit colorings
/// that agree up to the divergence cell and differ there.
struct ContinuumWitness {
  int witness_state = -1;
  int arc_a = -1;
  int arc_b = -1;
  Coloring state_coloring;
  long long diverge_cell = 0;
  EventuallyPeriodicColoring coloring_a;
  EventuallyPeriodicColoring coloring_b;
};

/// Exhibits the branching behind a Continuum classification, with the two
/// colorings differing exactly at the reported divergence cell, which is
/// at least `min_diverge_cell`.
inline ContinuumWitness continuum_witness(const StripSpec& s, int n,
                                          long long min_diverge_cell = 0,
                                          long long budget = kDefaultTransferBudget) {
  if (count_strip_colorings(s, n, budget) != Cardinality::continuum()) {
    throw precondition_error("coloring set is not a continuum");
  }
  TransferDigraph d = build_transfer_digraph(s, n, budget);
  PruneResult pruned =
      s.two_way ? prune_bidirectional(d.out) : prune_forward(d.out);

  // One-way: restrict to states reachable from positive-weight starts.
  std::vector<char> reachable(d.states.size(), 0);
  std::queue<int> queue;
  for (std::size_t v = 0; v < d.states.size(); ++v) {
    if (pruned.alive[v] && (s.two_way || d.start_weights[v] > 0)) {
      reachable[v] = 1;
      queue.push(static_cast<int>(v));
    }
  }
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : d.out[v]) {
      if (pruned.alive[w] && !reachable[w]) {
        reachable[w] = 1;
        queue.push(w);
      }
    }
  }
  detail::DigraphAnalysis analysis = detail::analyze(d.out, pruned.alive, reachable);

  ContinuumWitness witness;
  for (std::size_t v = 0; v < d.states.size() && witness.witness_state < 0; ++v) {
    int c = analysis.comp[v];
    if (c < 0 || !analysis.comp_cyclic[c]) continue;
    std::vector<int> in_scc;
    for (int w : d.out[v]) {
      if (analysis.comp[w] == c) in_scc.push_back(w);
    }
    if (in_scc.size() >= 2) {
      witness.witness_state = static_cast<int>(v);
      witness.arc_a = in_scc[0];
      witness.arc_b = in_scc[1];
    }
  }
  if (witness.witness_state < 0) {
    throw precondition_error("internal: continuum classification without a branch");
  }
  witness.state_coloring = d.states[witness.witness_state];
  const int witness_comp = analysis.comp[witness.witness_state];

  // A cycle through the witness inside its component, listed from one of the
  // witness's successors back to the witness itself.
  std::vector<int> loop;
  {
    std::vector<int> lp(d.states.size(), -2);
    std::queue<int> q2;
    for (int w : d.out[witness.witness_state]) {
      if (analysis.comp[w] == witness_comp && lp[w] == -2) {
        lp[w] = -1;
        q2.push(w);
      }
    }
    bool closed = false;
    while (!q2.empty() && !closed) {
      int v = q2.front();
      q2.pop();
      if (v == witness.witness_state) {
        closed = true;
        break;
      }
      for (int w : d.out[v]) {
        if (analysis.comp[w] == witness_comp && lp[w] == -2) {
          lp[w] = v;
          q2.push(w);
        }
      }
    }
    if (!closed && lp[witness.witness_state] == -2) {
      throw precondition_error("internal: witness component has no closed walk");
    }
    std::vector<int> rev;
    for (int v = witness.witness_state; v != -1; v = lp[v]) rev.push_back(v);
    std::reverse(rev.begin(), rev.end());  // successor, ..., witness
    loop = std::move(rev);
  }

  // Prefix ending at the witness: for one-way strips a start-to-witness path,
  // padded around the loop until the divergence cell is late enough; for
  // two-way strips the loop itself repeated, with the loop doubling as the
  // backward cycle (it ends at the witness, and witness -> loop[0] is an arc).
  std::vector<int> walk;
  if (!s.two_way) {
    std::vector<int> parent(d.states.size(), -1);
    std::vector<char> seen(d.states.size(), 0);
    std::queue<int> bfs;
    for (std::size_t v = 0; v < d.states.size(); ++v) {
      if (pruned.alive[v] && d.start_weights[v] > 0) {
        seen[v] = 1;
        bfs.push(static_cast<int>(v));
      }
    }
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : d.out[v]) {
        if (pruned.alive[w] && !seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          bfs.push(w);
        }
      }
    }
    if (!seen[witness.witness_state]) {
      throw precondition_error("internal: witness unreachable from the starts");
    }
    for (int v = witness.witness_state; v >= 0; v = parent[v]) walk.push_back(v);
    std::reverse(walk.begin(), walk.end());
  }
  while (static_cast<long long>(walk.size()) < min_diverge_cell ||
         (s.two_way && walk.empty() && min_diverge_cell > 0)) {
    walk.insert(walk.end(), loop.begin(), loop.end());
  }
  witness.diverge_cell = static_cast<long long>(walk.size());

  auto build = [&](int branch) {
    EventuallyPeriodicColoring coloring;
    coloring.two_way = s.two_way;
    // The forced walk from the branch state starts with the branch itself,
    // either as tail[0] or, when the tail is empty, as cycle[0].
    auto [tail, cycle] = detail::forced_continuation(d.out, pruned.alive, branch);
    std::vector<int> full = walk;
    full.insert(full.end(), tail.begin(), tail.end());
    for (int state : full) coloring.prefix.push_back(d.states[state]);
    for (int state : cycle) coloring.cycle.push_back(d.states[state]);
    if (s.two_way) {
      for (int state : loop) coloring.back_cycle.push_back(d.states[state]);
    } else if (s.head) {
      const auto head_colorings = enumerate_colorings(*s.head, n, budget);
      for (const auto& h : head_colorings.colorings()) {
        bool ok = true;
        for (auto [u, v] : s.inter) {
          if (u < s.head_size() && h[u] == d.states[full.front()][v]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          coloring.head_coloring = h;
          break;
        }
      }
    }
    return coloring;
  };
  witness.coloring_a = build(witness.arc_a);
  witness.coloring_b = build(witness.arc_b);
  return witness;
}

// ---------------------------------------------------------------------------
// Colorings, walks, and distance homomorphisms on countable graphs.

using ComputableColoring = std::function<int(VertexId)>;
using VertexPredicate = std::function<bool(VertexId)>;

/// The refinement step behind #St_{n+1} = 2^aleph0: keep c away from class
/// i0, keep i0 on the chosen subset, move the rest of the class to the new
/// color n.  Preconditions are probed on vertex ids 0..probe_bound.
inline ComputableColoring refine_coloring(const CountableGraph& g,
                                          const ComputableColoring& c, int n, int i0,
                                          const VertexPredicate& subset,
                                          int probe_bound = kDefaultProbeBound) {
  if (i0 < 0 || i0 >= n) throw precondition_error("i0 is not a color of [n]");
  bool found_i0 = false;
  for (VertexId v = 0; v <= static_cast<VertexId>(probe_bound); ++v) {
    int color = c(v);
    if (color < 0 || color >= n) {
      throw precondition_error("coloring leaves [n] at vertex " + std::to_string(v));
    }
    if (color == i0) found_i0 = true;
    if (subset(v) && color != i0) {
      throw precondition_error("subset escapes the color class of i0 at vertex " +
                               std::to_string(v));
    }
  }
  for (VertexId a = 0; a <= static_cast<VertexId>(probe_bound); ++a) {
    for (VertexId b = a + 1; b <= static_cast<VertexId>(probe_bound); ++b) {
      if (countable_adjacent(g, a, b) && c(a) == c(b)) {
        throw precondition_error("coloring is improper on the probe window");
      }
    }
  }
  if (!found_i0) {
    throw precondition_error("color class of i0 is empty on the probe window");
  }
  return [c, i0, n, subset](VertexId v) {
    int color = c(v);
    if (color != i0) return color;
    return subset(v) ? i0 : n;
  };
}

struct CoveringWalk {
  std::vector<VertexId> walk;       // consecutive entries are adjacent
  VertexId covered_prefix = 0;      // vertices 0..covered_prefix-1 all appear
};

/// Depth-first traversal walk of a finite connected graph: a surjective
/// homomorphism from a path with at most 2|V| - 1 vertices.
inline GraphHom covering_walk(const FiniteGraph& g) {
  if (g.vertex_count() == 0) throw precondition_error("empty graph has no covering walk");
  if (!is_connected(g)) throw precondition_error("graph is disconnected");
  std::vector<int> walk;
  std::vector<char> visited(g.vertex_count(), 0);
  auto dfs = [&](auto&& self, int v) -> void {
    visited[v] = 1;
    walk.push_back(v);
    for (int w : g.neighbors(v)) {
      if (!visited[w]) {
        self(self, w);
        walk.push_back(v);
      }
    }
  };
  dfs(dfs, 0);
  // Trim trailing backtracks that cover nothing new.
  while (walk.size() > 1) {
    std::vector<int> trimmed(walk.begin(), walk.end() - 1);
    std::vector<char> seen(g.vertex_count(), 0);
    for (int v : trimmed) seen[v] = 1;
    if (std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) {
      walk = std::move(trimmed);
    } else {
      break;
    }
  }
  return GraphHom{path_graph(static_cast<int>(walk.size())), g, walk};
}

/// Walk through a countable graph covering an initial segment of the vertex
/// enumeration; surjectivity onto ids 0..covered_prefix-1 is certified for
/// the given budget (maximum walk length).
inline CoveringWalk covering_walk(const CountableGraph& g, long long budget) {
  if (budget <= 0) throw precondition_error("walk budget must be positive");
  CoveringWalk out;
  if (std::holds_alternative<NaturalWheelGraph>(g)) {
    for (VertexId spoke = 1; static_cast<long long>(out.walk.size()) + 2 <= budget;
         ++spoke) {
      out.walk.push_back(spoke);
      out.walk.push_back(0);
    }
    if (out.walk.empty()) out.walk.push_back(0);
    out.covered_prefix = out.walk.size() < 2 ? 1 : out.walk.size() / 2 + 1;
    return out;
  }
  if (std::holds_alternative<CompleteMinusEdgeGraph>(g)) {
    if (budget == 1) {
      out.walk = {0};
      out.covered_prefix = 1;
      return out;
    }
    out.walk = {0, 2, 1};
    for (VertexId v = 3; static_cast<long long>(out.walk.size()) < budget; ++v) {
      out.walk.push_back(v);
    }
    if (static_cast<long long>(out.walk.size()) > budget) {
      out.walk.resize(budget);
    }
    out.covered_prefix = out.walk.size() >= 3 ? out.walk.size() : out.walk.size() - 1;
    return out;
  }
  const StripSpec& s = std::get<StripSpec>(g);
  s.validate();
  if (s.cell_size == 1 && !s.two_way && !s.head &&
      s.inter == std::vector<std::pair<int, int>>{{0, 0}}) {
    // The natural tree: the walk is the enumeration itself.
    for (long long v = 0; v < budget; ++v) out.walk.push_back(static_cast<VertexId>(v));
    out.covered_prefix = out.walk.size();
    return out;
  }
  // The walk chases the vertex enumeration: it extends by a shortest path to
  // each next id in turn, inside a window generous enough to hold any path
  // the budget could afford.
  const long long span = std::min<long long>(budget + 4, 4000);
  const int window_cells = static_cast<int>(s.two_way ? 2 * span + 1 : span);
  FiniteGraph window = unroll_truncation(s, window_cells);
  const long long shift = s.two_way ? window_cells / 2 : 0;
  std::vector<VertexId> window_to_id(window.vertex_count());
  std::map<VertexId, int> id_to_window;
  for (int v = 0; v < window.vertex_count(); ++v) {
    VertexId id;
    if (!s.two_way) {
      id = static_cast<VertexId>(v);
    } else {
      long long cell = v / s.cell_size - shift;
      id = strip_id_of_vertex(s, cell, v % s.cell_size);
    }
    window_to_id[v] = id;
    id_to_window[id] = v;
  }

  std::vector<int> walk{id_to_window.at(0)};
  const int probe = static_cast<int>(std::min<long long>(budget, 16));
  VertexId target = 1;
  while (static_cast<long long>(walk.size()) < budget) {
    auto it = id_to_window.find(target);
    if (it == id_to_window.end()) break;  // enumeration left the window
    std::vector<int> parent(window.vertex_count(), -2);
    std::queue<int> bfs;
    parent[walk.back()] = -1;
    bfs.push(walk.back());
    while (!bfs.empty() && parent[it->second] == -2) {
      int v = bfs.front();
      bfs.pop();
      for (int w : window.neighbors(v)) {
        if (parent[w] == -2) {
          parent[w] = v;
          bfs.push(w);
        }
      }
    }
    if (parent[it->second] == -2) {
      if (static_cast<long long>(target) < probe) {
        throw precondition_error("strip appears disconnected within the probe window");
      }
      break;
    }
    std::vector<int> path;
    for (int v = it->second; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());  // walk.back(), ..., target
    if (static_cast<long long>(walk.size() + path.size() - 1) > budget) break;
    walk.insert(walk.end(), path.begin() + 1, path.end());
    ++target;
  }
  for (int v : walk) out.walk.push_back(window_to_id[v]);
  std::vector<char> covered;
  for (VertexId id : out.walk) {
    if (id >= covered.size()) covered.resize(id + 1, 0);
    covered[id] = 1;
  }
  VertexId prefix = 0;
  while (prefix < covered.size() && covered[prefix]) ++prefix;
  out.covered_prefix = prefix;
  return out;
}

struct FiniteDistanceHom {
  std::vector<int> distances;  // a homomorphism into the natural tree
  bool surjective = false;     // finite graphs never cover T_N
  int eccentricity = 0;
};

/// d(p, .) as a homomorphism into the natural tree; requires connectivity
/// and bipartiteness (adjacent vertices then differ by exactly one).
inline FiniteDistanceHom distance_hom(const FiniteGraph& g, int p) {
  if (has_odd_cycle(g)) {
    throw precondition_error("graph has an odd cycle; d(p,.) is not a homomorphism");
  }
  std::vector<int> dist = bfs_distances(g, p);
  if (std::any_of(dist.begin(), dist.end(), [](int d) { return d < 0; })) {
    throw precondition_error("graph is disconnected");
  }
  FiniteDistanceHom out;
  out.distances = std::move(dist);
  out.eccentricity = *std::max_element(out.distances.begin(), out.distances.end());
  return out;
}

struct CountableDistanceHom {
  std::function<long long(VertexId)> distance;
  bool surjective = false;
  std::optional<long long> eccentricity;  // bounded graphs only
};

inline CountableDistanceHom distance_hom(const CountableGraph& g, VertexId p,
                                         long long budget = kDefaultTransferBudget) {
  if (std::holds_alternative<CompleteMinusEdgeGraph>(g)) {
    throw precondition_error("graph has an odd cycle; d(p,.) is not a homomorphism");
  }
  if (std::holds_alternative<NaturalWheelGraph>(g)) {
    CountableDistanceHom out;
    out.distance = [p](VertexId v) -> long long {
      if (v == p) return 0;
      if (p == 0 || v == 0) return 1;
      return 2;
    };
    out.surjective = false;
    out.eccentricity = (p == 0) ? 1 : 2;
    return out;
  }
  const StripSpec& s = std::get<StripSpec>(g);
  s.validate();
  if (count_strip_colorings(s, 2, budget) == Cardinality::finite(0)) {
    throw precondition_error("strip has an odd cycle; d(p,.) is not a homomorphism");
  }
  // Connectivity probe, mirroring covering_walk.
  covering_walk(g, std::max<long long>(16, 2 * s.cell_size + 4));

  auto cache = std::make_shared<std::map<VertexId, long long>>();
  StripSpec spec = s;
  CountableDistanceHom out;
  out.surjective = true;  // connected infinite locally finite graphs are unbounded
  out.distance = [spec, p, cache](VertexId v) -> long long {
    if (auto it = cache->find(v); it != cache->end()) return it->second;
    StripVertex vp = strip_vertex_of_id(spec, p);
    StripVertex vv = strip_vertex_of_id(spec, v);
    long long center = std::max(std::abs(vp.cell), std::abs(vv.cell));
    // Expand the window until the BFS distance is certified: a shortest
    // path of length d cannot leave a window reaching d cells past both
    // endpoints.
    for (long long radius = center + 4;; radius *= 2) {
      int cells = static_cast<int>(spec.two_way ? 2 * radius + 1 : radius + 1);
      FiniteGraph window = unroll_truncation(spec, cells);
      long long shift = spec.two_way ? radius : 0;
      auto window_index = [&](const StripVertex& sv) -> int {
        long long cell = sv.cell + shift;
        if (sv.in_head) return sv.head_vertex;
        if (cell < 0 || cell >= cells) return -1;
        int head_n = spec.two_way ? 0 : spec.head_size();
        return static_cast<int>(head_n + cell * spec.cell_size + sv.local);
      };
      int a = window_index(vp);
      int b = window_index(vv);
      if (a < 0 || b < 0) continue;
      std::vector<int> dist = bfs_distances(window, a);
      if (dist[b] < 0) continue;  // widen until connected
      long long d = dist[b];
      if (center + d + 1 <= radius) {
        (*cache)[v] = d;
        return d;
      }
    }
  };
  return out;
}

}  // namespace chromafun
