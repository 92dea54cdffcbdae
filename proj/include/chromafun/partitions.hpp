#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "chromafun/chromatic.hpp"
#include "chromafun/graph.hpp"
#include "chromafun/polynomial.hpp"

namespace chromafun {

inline constexpr int kDefaultPartitionLimit = 10;

using Coloring = std::vector<int>;

/// Partition of {0..n-1}, stored as a restricted growth string: rgs[v] is the
/// block index of v, blocks are numbered by first occurrence, so
/// rgs[0] = 0 and rgs[v] <= max(rgs[0..v-1]) + 1.
class Partition {
 public:
  Partition() = default;

  static Partition from_rgs(std::vector<int> rgs) {
    Partition p;
    int next = 0;
    for (int b : rgs) {
      if (b < 0 || b > next) throw precondition_error("not a restricted growth string");
      if (b == next) ++next;
    }
    p.rgs_ = std::move(rgs);
    p.block_count_ = next;
    return p;
  }

  /// Builds the canonical partition with the given blocks (any order).
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
    std::vector<int> owner(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw precondition_error("empty partition block");
      for (int v : blocks[b]) {
        if (v < 0 || v >= n || owner[v] >= 0) {
          throw precondition_error("blocks do not partition the vertex set");
        }
        owner[v] = static_cast<int>(b);
      }
    }
    std::vector<int> rgs(n);
    std::vector<int> relabel(blocks.size(), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
      if (owner[v] < 0) throw precondition_error("blocks do not cover the vertex set");
      if (relabel[owner[v]] < 0) relabel[owner[v]] = next++;
      rgs[v] = relabel[owner[v]];
    }
    Partition p;
    p.rgs_ = std::move(rgs);
    p.block_count_ = next;
    return p;
  }

  int element_count() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return block_count_; }
  int block_of(int v) const { return rgs_.at(v); }
  const std::vector<int>& rgs() const { return rgs_; }

  std::vector<std::vector<int>> blocks() const {
    std::vector<std::vector<int>> out(block_count_);
    for (int v = 0; v < element_count(); ++v) out[rgs_[v]].push_back(v);
    return out;
  }

  bool operator==(const Partition& other) const { return rgs_ == other.rgs_; }
  bool operator!=(const Partition& other) const { return !(*this == other); }
  bool operator<(const Partition& other) const { return rgs_ < other.rgs_; }

 private:
  std::vector<int> rgs_;
  int block_count_ = 0;
};

// A stable partition is a Partition whose blocks are independent sets of a
// given graph; stability is a relation between the two values, so it is
// checked at operation boundaries rather than carried by a distinct type.
using StablePartition = Partition;

inline bool is_stable_partition(const FiniteGraph& g, const Partition& p) {
  if (p.element_count() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (p.block_of(u) == p.block_of(v)) return false;
  }
  return true;
}

/// All stable partitions of g, in restricted-growth-string order.
/// Backtracks over block assignments with incremental independence checks.
inline std::vector<StablePartition> enumerate_stable_partitions(
    const FiniteGraph& g, int limit = kDefaultPartitionLimit) {
  const int n = g.vertex_count();
  if (n > limit) {
    throw resource_error("stable partition enumeration limited to " +
                         std::to_string(limit) + " vertices, got " + std::to_string(n));
  }
  std::vector<StablePartition> out;
  std::vector<int> rgs(n, 0);
  auto assign = [&](auto&& self, int v, int used_blocks) -> void {
    if (v == n) {
      out.push_back(Partition::from_rgs(rgs));
      return;
    }
    for (int b = 0; b <= used_blocks && b < n; ++b) {
      bool ok = true;
      for (int w : g.neighbors(v)) {
        if (w < v && rgs[w] == b) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      rgs[v] = b;
      self(self, v + 1, std::max(used_blocks, b + 1));
    }
  };
  if (n == 0) {
    out.push_back(Partition::from_rgs({}));
  } else {
    assign(assign, 0, 0);
  }
  return out;
}

/// #St_k(g) for every k, by direct enumeration.
inline StVector st_counts(const FiniteGraph& g, int limit = kDefaultPartitionLimit) {
  StVector st;
  for (const auto& p : enumerate_stable_partitions(g, limit)) {
    st.set(p.block_count(), st.at(p.block_count()) + 1);
  }
  return st;
}

inline bool is_proper_coloring(const FiniteGraph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (c[u] == c[v]) return false;
  }
  return true;
}

/// The stable partition of color classes of a proper coloring.
inline StablePartition partition_of_coloring(const FiniteGraph& g, const Coloring& c) {
  if (!is_proper_coloring(g, c)) {
    throw precondition_error("coloring is not proper");
  }
  std::vector<int> rgs(c.size());
  std::vector<std::pair<int, int>> seen;  // (color, block index), first occurrence
  for (std::size_t v = 0; v < c.size(); ++v) {
    int block = -1;
    for (const auto& [color, b] : seen) {
      if (color == c[v]) {
        block = b;
        break;
      }
    }
    if (block < 0) {
      block = static_cast<int>(seen.size());
      seen.emplace_back(c[v], block);
    }
    rgs[v] = block;
  }
  return Partition::from_rgs(std::move(rgs));
}

/// The surjection g ->> K_{#blocks} sending each vertex to its block index.
inline GraphHom canonical_surjection(const FiniteGraph& g, const StablePartition& p) {
  if (!is_stable_partition(g, p)) {
    throw precondition_error("partition is not stable for the graph");
  }
  return GraphHom{g, complete_graph(p.block_count()), p.rgs()};
}

/// Splits a proper coloring into its stable partition and the injection of
/// block indices into the color set.
inline std::pair<StablePartition, Injection> decompose_coloring(const FiniteGraph& g,
                                                                const Coloring& c,
                                                                int color_count) {
  StablePartition p = partition_of_coloring(g, c);
  const int k = p.block_count();
  std::vector<int> block_color(k, -1);
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (block_color[p.block_of(static_cast<int>(v))] < 0) {
      block_color[p.block_of(static_cast<int>(v))] = c[v];
    }
  }
  for (int color : block_color) {
    if (color < 0 || color >= color_count) {
      throw precondition_error("coloring uses colors outside the stated color set");
    }
  }
  Injection inj(k, color_count, std::move(block_color));
  return {std::move(p), std::move(inj)};
}

/// Inverse of decompose_coloring.
inline Coloring recompose_coloring(const FiniteGraph& g, const StablePartition& p,
                                   const Injection& inj) {
  if (!is_stable_partition(g, p)) {
    throw precondition_error("partition is not stable for the graph");
  }
  if (inj.source_size != p.block_count()) {
    throw precondition_error("injection domain does not match the block count");
  }
  Coloring c(p.element_count());
  for (int v = 0; v < p.element_count(); ++v) c[v] = inj.map[p.block_of(v)];
  return c;
}

/// Preimage partition along a surjective homomorphism; blocks are phi^{-1}
/// of the blocks of p.  The induced map St(target) -> St(source) is
/// injective.
inline StablePartition pullback_partition(const GraphHom& phi, const StablePartition& p) {
  if (!validate_hom(phi)) throw precondition_error("invalid homomorphism");
  if (!is_surjective_hom(phi)) {
    throw precondition_error("pullback_partition requires a surjective homomorphism");
  }
  if (!is_stable_partition(phi.target, p)) {
    throw precondition_error("partition is not stable for the target graph");
  }
  std::vector<int> raw(phi.source.vertex_count());
  for (int v = 0; v < phi.source.vertex_count(); ++v) raw[v] = p.block_of(phi.map[v]);
  // Renormalize to restricted growth form.
  std::vector<int> relabel(p.block_count(), -1);
  int next = 0;
  for (int& b : raw) {
    if (relabel[b] < 0) relabel[b] = next++;
    b = relabel[b];
  }
  return Partition::from_rgs(std::move(raw));
}

}  // namespace chromafun
