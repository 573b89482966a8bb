#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flagspec/graph.hpp"

namespace flagspec {

/// (v, b, r, k, lambda) of a balanced incomplete block design.
struct DesignParams {
  int v = 0;
  int b = 0;
  int r = 0;
  int k = 0;
  int lambda = 0;

  bool symmetric() const { return v == b; }
  bool biplane() const { return symmetric() && lambda == 2; }
  /// v*r == b*k and lambda*(v-1) == r*(k-1)
  bool satisfies_identities() const {
    return static_cast<long>(v) * r == static_cast<long>(b) * k &&
           static_cast<long>(lambda) * (v - 1) == static_cast<long>(r) * (k - 1);
  }
  std::string to_string() const;
  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

/// r = lambda(v-1)/(k-1), b = vr/k. Throws NonIntegralParams when either
/// division is inexact.
DesignParams derive_params(int v, int k, int lambda);

using Block = std::vector<int>;

/// Point set [0, v) with an ordered list of blocks. Each block is kept as a
/// strictly increasing point list; block order is preserved because flags
/// refer to blocks by index.
class Design {
 public:
  Design() = default;
  /// Sorts every block and checks structure only (range, no repeated point
  /// inside a block, at least one block). Throws MalformedDesign.
  Design(int v, std::vector<Block> blocks, bool allow_repeated_blocks = false);

  int points() const { return v_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(int index) const { return blocks_[static_cast<std::size_t>(index)]; }
  bool allow_repeated_blocks() const { return allow_repeated_; }
  bool contains(int block_index, int point) const;

  friend bool operator==(const Design&, const Design&) = default;

 private:
  int v_ = 0;
  std::vector<Block> blocks_;
  bool allow_repeated_ = false;
};

/// Full combinatorial check: uniform block size, non-triviality, block
/// distinctness (unless allowed), and exact pair concurrence over every
/// unordered pair. Returns the verified parameters.
DesignParams validate_design(const Design& d);

/// Incident (point, block instance) pair.
struct Flag {
  int point = 0;
  int block_index = 0;
  friend auto operator<=>(const Flag&, const Flag&) = default;
};

/// All b*k flags ordered by (block_index, point).
std::vector<Flag> enumerate_flags(const Design& d);

/// Bipartite incidence graph: points are vertices [0, v), block j is vertex
/// v + j, with an edge per flag.
Graph incidence_graph(const Design& d);

/// Finite group given by its Cayley table, elements labelled [0, order).
/// Element 0 is the identity for every group built here.
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  /// Quaternion group Q8 with elements ordered 1, i, j, k, -1, -i, -j, -k.
  static FiniteGroup quaternion();
  /// Element (a, b) is labelled a * |rhs| + b.
  static FiniteGroup direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs);

  int order() const { return static_cast<int>(table_.size()); }
  const std::string& name() const { return name_; }
  int multiply(int a, int b) const { return table_[a][b]; }
  int inverse(int a) const { return inverse_[a]; }

 private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

/// Develops a base block through the group: block g is {x * g : x in base},
/// for g = 0, 1, ..., order-1. The result is validated.
Design develop_difference_set(const FiniteGroup& group, std::span<const int> base_block);

/// Cyclic case: blocks {(x + g) mod n : x in base} for g in [0, n).
Design design_from_difference_set(int group_order, std::span<const int> base_block);

/// All k-subsets of a v-set, in lexicographic order.
Design complete_design(int v, int k);

/// Image of `d` under a point relabelling (point p becomes perm[p]) followed
/// by reordering of blocks (new block i is old block block_order[i]).
Design relabel(const Design& d, std::span<const int> point_perm, std::span<const int> block_order);

}  // namespace flagspec
