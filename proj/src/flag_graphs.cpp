#include "flagspec/flag_graphs.hpp"

#include <algorithm>
#include <iterator>

#include "flagspec/errors.hpp"

namespace flagspec {

std::string to_string(FlagGraphVariant variant) {
  return variant == FlagGraphVariant::Gamma1 ? "gamma1" : "gamma2";
}

FlagGraph gamma1(const Design& d) {
  const DesignParams params = validate_design(d);
  std::vector<Flag> flags = enumerate_flags(d);
  const int n = static_cast<int>(flags.size());
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (params.k + params.r - 2) / 2);
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (flags[a].point == flags[c].point || flags[a].block_index == flags[c].block_index) {
        edges.push_back({a, c});
      }
    }
  }
  return {Graph(n, std::move(edges)), std::move(flags), params, FlagGraphVariant::Gamma1};
}

FlagGraph gamma2(const Design& d) {
  const DesignParams params = validate_design(d);
  if (!params.biplane()) {
    throw NotABiplane("design " + params.to_string() + " is not a symmetric design with lambda = 2");
  }
  if (d.allow_repeated_blocks()) {
    // validate_design skipped the distinctness check under this policy
    std::vector<Block> sorted = d.blocks();
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw NotABiplane("gamma2 is undefined for designs with repeated blocks");
    }
  }
  std::vector<Flag> flags = enumerate_flags(d);
  const int n = static_cast<int>(flags.size());
  std::vector<Edge> edges;
  std::vector<int> meet;
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      const auto [p, bc] = flags[a];
      const auto [q, bd] = flags[c];
      if (p == q || bc == bd) continue;
      const Block& x = d.block(bc);
      const Block& y = d.block(bd);
      meet.clear();
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(meet));
      if (meet.size() == 2 && std::min(p, q) == meet[0] && std::max(p, q) == meet[1]) {
        edges.push_back({a, c});
      }
    }
  }
  return {Graph(n, std::move(edges)), std::move(flags), params, FlagGraphVariant::Gamma2};
}

std::vector<int> flag_to_line_graph_vertex(const std::vector<Flag>& flags) {
  // Edges {p, v+j} sorted lexicographically are ordered by (p, j).
  std::vector<Flag> by_point = flags;
  std::sort(by_point.begin(), by_point.end(), [](const Flag& a, const Flag& b) {
    return a.point != b.point ? a.point < b.point : a.block_index < b.block_index;
  });
  std::vector<int> out;
  out.reserve(flags.size());
  for (const Flag& f : flags) {
    auto it = std::lower_bound(by_point.begin(), by_point.end(), f, [](const Flag& a, const Flag& b) {
      return a.point != b.point ? a.point < b.point : a.block_index < b.block_index;
    });
    out.push_back(static_cast<int>(it - by_point.begin()));
  }
  return out;
}

}  // namespace flagspec
