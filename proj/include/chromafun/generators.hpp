#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "chromafun/graph.hpp"

namespace chromafun {

inline FiniteGraph edgeless_graph(int n) { return FiniteGraph(n, {}); }

inline FiniteGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return FiniteGraph(n, std::move(edges));
}

inline FiniteGraph cycle_graph(int n) {
  if (n < 3) throw precondition_error("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return FiniteGraph(n, std::move(edges));
}

/// Star K_{1,k} with center 0.
inline FiniteGraph star_graph(int spokes) {
  std::vector<Edge> edges;
  for (int v = 1; v <= spokes; ++v) edges.emplace_back(0, v);
  return FiniteGraph(spokes + 1, std::move(edges));
}

/// Complete graph with one edge removed ({0,1} by convention).
inline FiniteGraph complete_minus_edge(int n) {
  if (n < 2) throw precondition_error("K_n - e needs at least 2 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
  return FiniteGraph(n, std::move(edges));
}

/// Labeled tree from a Pruefer sequence over [n], n = seq.size() + 2.
inline FiniteGraph tree_from_prufer(const std::vector<int>& seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int v : seq) {
    if (v < 0 || v >= n) throw precondition_error("Pruefer entry out of range");
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int v : seq) {
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1 && v < ptr) {
      leaf = v;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return FiniteGraph(n, std::move(edges));
}

/// All labeled trees on n vertices via Pruefer enumeration (n^(n-2) trees).
template <typename Fn>
void for_each_labeled_tree(int n, Fn&& fn) {
  if (n <= 0) return;
  if (n == 1) {
    fn(edgeless_graph(1));
    return;
  }
  if (n == 2) {
    fn(complete_graph(2));
    return;
  }
  std::vector<int> seq(n - 2, 0);
  while (true) {
    fn(tree_from_prufer(seq));
    int i = n - 3;
    while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
}

/// All labeled graphs on n vertices (2^C(n,2) of them), in edge-mask order.
template <typename Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  const int m = static_cast<int>(all.size());
  if (m > 30) throw resource_error("too many potential edges to enumerate");
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) edges.push_back(all[i]);
    fn(FiniteGraph(n, std::move(edges)));
  }
}

inline FiniteGraph random_graph(std::mt19937& rng, int n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return FiniteGraph(n, std::move(edges));
}

/// Lexicographically least graph6 string over all vertex relabelings.
/// Brute force over permutations; intended for n <= 8.
inline std::string canonical_graph6(const FiniteGraph& g) {
  const int n = g.vertex_count();
  if (n > 9) throw resource_error("canonical_graph6 is brute force; n too large");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    std::string candidate = emit_graph6(FiniteGraph(n, std::move(edges)));
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace chromafun
