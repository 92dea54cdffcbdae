#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chromafun/graph.hpp"
#include "chromafun/polynomial.hpp"

namespace chromafun {

inline constexpr int kDefaultVertexLimit = 12;

inline FiniteGraph delete_edge(const FiniteGraph& g, Edge e) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& edge : g.edges()) {
    if (edge != e) edges.push_back(edge);
  }
  return FiniteGraph(g.vertex_count(), std::move(edges));
}

/// Contracts {u,v} (u < v): v is merged into u, parallel edges collapse, and
/// the remaining vertices are relabeled densely (indices above v shift down).
inline FiniteGraph contract_edge(const FiniteGraph& g, Edge e) {
  const auto [u, v] = e;
  if (!g.has_edge(u, v)) throw precondition_error("contracting a non-edge");
  auto relabel = [u = u, v = v](int w) {
    if (w == v) return u;
    return w > v ? w - 1 : w;
  };
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [a, b] : g.edges()) {
    int x = relabel(a);
    int y = relabel(b);
    if (x != y) edges.emplace_back(x, y);
  }
  return FiniteGraph(g.vertex_count() - 1, std::move(edges));
}

/// Exact chromatic polynomial computation by deletion-contraction.
/// The memo cache is keyed by the graph6 string of the densely relabeled
/// minor (no canonical labeling).  A solver instance is not thread-safe;
/// use one per worker.
class ChromaticSolver {
 public:
  explicit ChromaticSolver(int vertex_limit = kDefaultVertexLimit)
      : vertex_limit_(vertex_limit) {}

  int vertex_limit() const { return vertex_limit_; }

  IntPolynomial polynomial(const FiniteGraph& g) {
    if (g.vertex_count() > vertex_limit_) {
      throw resource_error("graph on " + std::to_string(g.vertex_count()) +
                           " vertices exceeds the vertex limit " +
                           std::to_string(vertex_limit_));
    }
    return compute(g);
  }

  const std::unordered_map<std::string, IntPolynomial>& cache() const { return memo_; }

  void seed_cache(const std::string& graph6, IntPolynomial p) {
    memo_.emplace(graph6, std::move(p));
  }

 private:
  IntPolynomial compute(const FiniteGraph& g) {
    if (g.edge_count() == 0) {
      return IntPolynomial::monomial(g.vertex_count());
    }
    std::string key = emit_graph6(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Heuristic: recurse on an edge whose endpoints have maximum degree sum.
    Edge best = g.edges().front();
    int best_score = -1;
    for (const auto& [u, v] : g.edges()) {
      int score = g.degree(u) + g.degree(v);
      if (score > best_score) {
        best_score = score;
        best = {u, v};
      }
    }
    IntPolynomial result = compute(delete_edge(g, best)) - compute(contract_edge(g, best));
    memo_.emplace(std::move(key), result);
    return result;
  }

  int vertex_limit_;
  std::unordered_map<std::string, IntPolynomial> memo_;
};

inline IntPolynomial chromatic_polynomial(const FiniteGraph& g,
                                          int vertex_limit = kDefaultVertexLimit) {
  ChromaticSolver solver(vertex_limit);
  return solver.polynomial(g);
}

inline int chromatic_number(const FiniteGraph& g, ChromaticSolver& solver) {
  if (g.vertex_count() == 0) {
    throw precondition_error("chromatic number of the empty graph is undefined");
  }
  IntPolynomial p = solver.polynomial(g);
  for (int n = 1; n <= g.vertex_count(); ++n) {
    if (p.evaluate(n) != 0) return n;
  }
  throw precondition_error("chromatic polynomial vanished through n = vertex count");
}

inline int chromatic_number(const FiniteGraph& g,
                            int vertex_limit = kDefaultVertexLimit) {
  ChromaticSolver solver(vertex_limit);
  return chromatic_number(g, solver);
}

/// Theorem: finite graphs are chromatically equivalent (isomorphic chromatic
/// functors) exactly when their chromatic polynomials coincide.
inline bool decide_equivalent_finite(const FiniteGraph& g1, const FiniteGraph& g2,
                                     ChromaticSolver& solver) {
  return solver.polynomial(g1) == solver.polynomial(g2);
}

inline bool decide_equivalent_finite(const FiniteGraph& g1, const FiniteGraph& g2,
                                     int vertex_limit = kDefaultVertexLimit) {
  ChromaticSolver solver(vertex_limit);
  return decide_equivalent_finite(g1, g2, solver);
}

}  // namespace chromafun
