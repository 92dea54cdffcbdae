#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromafun/errors.hpp"

namespace chromafun {

using Edge = std::pair<int, int>;

/// Simple undirected graph on dense vertex indices 0..n-1.
/// Edges are stored normalized (u < v, sorted, deduplicated).
/// Immutable after construction; safe to share across threads.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  FiniteGraph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) {
      throw precondition_error("vertex count must be nonnegative");
    }
    for (auto& [u, v] : edges) {
      if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw precondition_error("edge endpoint out of range");
      }
      if (u == v) {
        throw precondition_error("self-loops are not allowed");
      }
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  bool operator==(const FiniteGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }
  bool operator!=(const FiniteGraph& other) const { return !(*this == other); }
  bool operator<(const FiniteGraph& other) const {
    return std::tie(n_, edges_) < std::tie(other.n_, other.edges_);
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

inline FiniteGraph complete_graph(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return FiniteGraph(n, std::move(edges));
}

// ---------------------------------------------------------------------------
// graph6 interchange format: 6-bit big-endian bitstream of the upper
// triangle in column order, offset-63 bytes.  The ">>graph6<<" header is
// tolerated on input and never emitted.

namespace detail {

inline int graph6_byte(unsigned char c, std::size_t offset) {
  if (c < 63 || c > 126) {
    throw parse_error("graph6 byte out of printable range", offset);
  }
  return c - 63;
}

}  // namespace detail

inline FiniteGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw parse_error("empty graph6 string", base);

  std::size_t pos = 0;
  long long n = 0;
  int b0 = detail::graph6_byte(static_cast<unsigned char>(text[0]), base);
  if (b0 < 63) {
    n = b0;
    pos = 1;
  } else if (text.size() >= 4 && text[1] != 126) {
    n = 0;
    for (int i = 1; i <= 3; ++i) {
      n = (n << 6) | detail::graph6_byte(static_cast<unsigned char>(text[i]), base + i);
    }
    pos = 4;
  } else if (text.size() >= 8) {
    n = 0;
    for (int i = 2; i <= 7; ++i) {
      n = (n << 6) | detail::graph6_byte(static_cast<unsigned char>(text[i]), base + i);
    }
    pos = 8;
  } else {
    throw parse_error("truncated graph6 vertex-count field", base + text.size());
  }
  if (n > 1'000'000) {
    throw resource_error("graph6 vertex count " + std::to_string(n) +
                         " exceeds the supported maximum");
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != need) {
    throw parse_error("graph6 body length mismatch: expected " +
                          std::to_string(need) + " bytes, got " +
                          std::to_string(text.size() - pos),
                      base + text.size());
  }

  std::vector<Edge> edges;
  long long bit = 0;
  for (std::size_t i = pos; i < text.size(); ++i) {
    int value = detail::graph6_byte(static_cast<unsigned char>(text[i]), base + i);
    for (int k = 5; k >= 0; --k, ++bit) {
      bool set = (value >> k) & 1;
      if (bit >= bits) {
        if (set) {
          throw parse_error("nonzero graph6 padding bits", base + i);
        }
        continue;
      }
      if (set) {
        // Bit index -> (row, column) of the upper triangle in column order.
        long long b = bit;
        long long col = 1;
        while (b >= col) {
          b -= col;
          ++col;
        }
        edges.emplace_back(static_cast<int>(b), static_cast<int>(col));
      }
    }
  }
  return FiniteGraph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_graph6(const FiniteGraph& g) {
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
  }
  const long long bits = n * (n - 1) / 2;
  int acc = 0;
  int filled = 0;
  long long bit = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++bit) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + 63));
  }
  (void)bits;
  return out;
}

// ---------------------------------------------------------------------------
// Homomorphisms and color-set injections.

/// Vertex map between two graphs.  Valid when every source edge maps to a
/// target edge (which forbids collapsing an edge to a vertex).
struct GraphHom {
  FiniteGraph source;
  FiniteGraph target;
  std::vector<int> map;
};

inline void check_hom_shape(const GraphHom& h) {
  if (static_cast<int>(h.map.size()) != h.source.vertex_count()) {
    throw precondition_error("homomorphism map length does not match source");
  }
  for (int image : h.map) {
    if (image < 0 || image >= h.target.vertex_count()) {
      throw precondition_error("homomorphism image vertex out of range");
    }
  }
}

inline bool validate_hom(const GraphHom& h) {
  check_hom_shape(h);
  for (const auto& [u, v] : h.source.edges()) {
    if (!h.target.has_edge(h.map[u], h.map[v])) return false;
  }
  return true;
}

inline bool is_surjective_hom(const GraphHom& h) {
  check_hom_shape(h);
  std::vector<char> hit(h.target.vertex_count(), 0);
  for (int image : h.map) hit[image] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

inline GraphHom compose_hom(const GraphHom& first, const GraphHom& second) {
  if (first.target != second.source) {
    throw precondition_error("homomorphisms do not compose: target/source mismatch");
  }
  std::vector<int> map(first.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map[first.map[i]];
  return GraphHom{first.source, second.target, std::move(map)};
}

/// Injection [source_size] -> [target_size], a morphism of Set^inj.
struct Injection {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> map;

  Injection() = default;
  Injection(int source, int target, std::vector<int> m)
      : source_size(source), target_size(target), map(std::move(m)) {
    if (source_size < 0 || target_size < 0 || source_size > target_size ||
        static_cast<int>(map.size()) != source_size) {
      throw precondition_error("malformed injection");
    }
    std::vector<char> seen(target_size, 0);
    for (int image : map) {
      if (image < 0 || image >= target_size || seen[image]) {
        throw precondition_error("map is not an injection");
      }
      seen[image] = 1;
    }
  }

  static Injection identity(int n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i;
    return Injection(n, n, std::move(m));
  }

  bool operator==(const Injection& other) const {
    return source_size == other.source_size && target_size == other.target_size &&
           map == other.map;
  }
};

inline Injection compose_injection(const Injection& first, const Injection& second) {
  if (first.target_size != second.source_size) {
    throw precondition_error("injections do not compose");
  }
  std::vector<int> map(first.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = second.map[first.map[i]];
  return Injection(first.source_size, second.target_size, std::move(map));
}

// ---------------------------------------------------------------------------
// Breadth-first utilities.

/// Distances from p; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const FiniteGraph& g, int p) {
  if (p < 0 || p >= g.vertex_count()) {
    throw precondition_error("BFS source out of range");
  }
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[p] = 0;
  queue.push(p);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

/// Shortest-path distance in the adjacency metric; nullopt when disconnected.
inline std::optional<int> adjacency_distance(const FiniteGraph& g, int p, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw precondition_error("BFS target out of range");
  }
  int d = bfs_distances(g, p)[v];
  if (d < 0) return std::nullopt;
  return d;
}

inline bool is_connected(const FiniteGraph& g) {
  if (g.vertex_count() <= 1) return true;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

/// True iff g is not bipartite.
inline bool has_odd_cycle(const FiniteGraph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (side[start] >= 0) continue;
    side[start] = 0;
    std::queue<int> queue;
    queue.push(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = side[u] ^ 1;
          queue.push(w);
        } else if (side[w] == side[u]) {
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace chromafun
