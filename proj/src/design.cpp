#include "flagspec/design.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "flagspec/errors.hpp"

namespace flagspec {

PairCountMismatch::PairCountMismatch(int p, int q, long found, long expected)
    : ValidationError("PairCountMismatch",
                      "pair {" + std::to_string(p) + "," + std::to_string(q) + "} lies in " +
                          std::to_string(found) + " blocks, expected " + std::to_string(expected)),
      pair_(p, q),
      found_(found),
      expected_(expected) {}

RepeatedBlock::RepeatedBlock(std::size_t index)
    : ValidationError("RepeatedBlock",
                      "block " + std::to_string(index) + " repeats an earlier block"),
      index_(index) {}

std::string DesignParams::to_string() const {
  std::ostringstream os;
  os << "(" << v << "," << b << "," << r << "," << k << "," << lambda << ")";
  return os.str();
}

DesignParams derive_params(int v, int k, int lambda) {
  if (!(v > k && k > 1) || lambda < 1) {
    throw NonIntegralParams("derive_params needs v > k > 1 and lambda >= 1");
  }
  long num = static_cast<long>(lambda) * (v - 1);
  if (num % (k - 1) != 0) {
    throw NonIntegralParams("r = " + std::to_string(num) + "/" + std::to_string(k - 1) +
                            " is not an integer");
  }
  long r = num / (k - 1);
  if ((v * r) % k != 0) {
    throw NonIntegralParams("b = " + std::to_string(v * r) + "/" + std::to_string(k) +
                            " is not an integer");
  }
  return {v, static_cast<int>(v * r / k), static_cast<int>(r), k, lambda};
}

Design::Design(int v, std::vector<Block> blocks, bool allow_repeated_blocks)
    : v_(v), blocks_(std::move(blocks)), allow_repeated_(allow_repeated_blocks) {
  if (v < 1) throw MalformedDesign("design needs at least one point");
  if (blocks_.empty()) throw MalformedDesign("design needs at least one block");
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    auto& blk = blocks_[i];
    std::sort(blk.begin(), blk.end());
    for (int p : blk) {
      if (p < 0 || p >= v) {
        throw MalformedDesign("block " + std::to_string(i) + " has point " +
                              std::to_string(p) + " outside [0," + std::to_string(v) + ")");
      }
    }
    if (std::adjacent_find(blk.begin(), blk.end()) != blk.end()) {
      throw MalformedDesign("block " + std::to_string(i) + " repeats a point");
    }
  }
}

bool Design::contains(int block_index, int point) const {
  const auto& blk = block(block_index);
  return std::binary_search(blk.begin(), blk.end(), point);
}

DesignParams validate_design(const Design& d) {
  const int v = d.points();
  const int b = d.block_count();
  const int k = static_cast<int>(d.block(0).size());
  for (int j = 1; j < b; ++j) {
    if (static_cast<int>(d.block(j).size()) != k) {
      throw UnequalBlockSizes("block " + std::to_string(j) + " has size " +
                              std::to_string(d.block(j).size()) + ", block 0 has size " +
                              std::to_string(k));
    }
  }
  // v - k = 1 is admitted: the (4,3,2) biplane is one such design.
  if (k <= 1 || k >= v) {
    throw TrivialDesign("block size " + std::to_string(k) + " on " + std::to_string(v) +
                        " points is trivial");
  }
  if (!d.allow_repeated_blocks()) {
    std::set<Block> seen;
    for (int j = 0; j < b; ++j) {
      if (!seen.insert(d.block(j)).second) throw RepeatedBlock(static_cast<std::size_t>(j));
    }
  }

  std::vector<long> pair_count(static_cast<std::size_t>(v) * v, 0);
  std::vector<int> replication(static_cast<std::size_t>(v), 0);
  for (const auto& blk : d.blocks()) {
    for (std::size_t a = 0; a < blk.size(); ++a) {
      ++replication[blk[a]];
      for (std::size_t c = a + 1; c < blk.size(); ++c) {
        ++pair_count[static_cast<std::size_t>(blk[a]) * v + blk[c]];
      }
    }
  }
  const long lambda = pair_count[1];
  for (int p = 0; p < v; ++p) {
    for (int q = p + 1; q < v; ++q) {
      long found = pair_count[static_cast<std::size_t>(p) * v + q];
      if (found != lambda || found == 0) throw PairCountMismatch(p, q, found, lambda);
    }
  }
  const int r = replication[0];
  for (int p = 1; p < v; ++p) {
    if (replication[p] != r) {
      throw ValidationError("NonUniformReplication",
                            "point " + std::to_string(p) + " lies in " +
                                std::to_string(replication[p]) + " blocks, point 0 in " +
                                std::to_string(r));
    }
  }
  DesignParams params{v, b, r, k, static_cast<int>(lambda)};
  if (!params.satisfies_identities()) {
    throw ValidationError("ParameterIdentity", "parameters " + params.to_string() +
                                                   " violate vr=bk or lambda(v-1)=r(k-1)");
  }
  return params;
}

std::vector<Flag> enumerate_flags(const Design& d) {
  std::vector<Flag> flags;
  for (int j = 0; j < d.block_count(); ++j) {
    for (int p : d.block(j)) flags.push_back({p, j});
  }
  return flags;
}

Graph incidence_graph(const Design& d) {
  std::vector<Edge> edges;
  const int v = d.points();
  for (int j = 0; j < d.block_count(); ++j) {
    for (int p : d.block(j)) edges.push_back({p, v + j});
  }
  return Graph(v + d.block_count(), std::move(edges));
}

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const int n = order();
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) throw ValidationError("InvalidGroup", "ragged Cayley table");
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) inverse_[a] = b;
    }
    if (inverse_[a] < 0) throw ValidationError("InvalidGroup", "element without inverse in " + name_);
  }
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup("Z" + std::to_string(n), std::move(t));
}

FiniteGroup FiniteGroup::quaternion() {
  // unit products among {1,i,j,k}: sign and resulting unit
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      int sign = (a >= 4 ? -1 : 1) * (b >= 4 ? -1 : 1) * kSign[a % 4][b % 4];
      t[a][b] = kUnit[a % 4][b % 4] + (sign < 0 ? 4 : 0);
    }
  }
  return FiniteGroup("Q8", std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  const int m = rhs.order();
  const int n = lhs.order() * m;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      t[x][y] = lhs.multiply(x / m, y / m) * m + rhs.multiply(x % m, y % m);
  return FiniteGroup(lhs.name() + "x" + rhs.name(), std::move(t));
}

Design develop_difference_set(const FiniteGroup& group, std::span<const int> base_block) {
  for (int x : base_block) {
    if (x < 0 || x >= group.order()) {
      throw MalformedDesign("base block element " + std::to_string(x) + " outside the group");
    }
  }
  std::vector<Block> blocks;
  for (int g = 0; g < group.order(); ++g) {
    Block blk;
    for (int x : base_block) blk.push_back(group.multiply(x, g));
    blocks.push_back(std::move(blk));
  }
  Design d(group.order(), std::move(blocks));
  validate_design(d);
  return d;
}

Design design_from_difference_set(int group_order, std::span<const int> base_block) {
  return develop_difference_set(FiniteGroup::cyclic(group_order), base_block);
}

Design complete_design(int v, int k) {
  std::vector<Block> blocks;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    blocks.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == v - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return Design(v, std::move(blocks));
}

Design relabel(const Design& d, std::span<const int> point_perm, std::span<const int> block_order) {
  std::vector<Block> blocks;
  blocks.reserve(block_order.size());
  for (int j : block_order) {
    Block blk;
    for (int p : d.block(j)) blk.push_back(point_perm[p]);
    blocks.push_back(std::move(blk));
  }
  return Design(d.points(), std::move(blocks), d.allow_repeated_blocks());
}

}  // namespace flagspec
