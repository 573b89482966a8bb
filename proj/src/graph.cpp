#include "flagspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

#include "flagspec/errors.hpp"

namespace flagspec {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidGraph("negative vertex count");
  for (auto& e : edges_) {
    if (e.first > e.second) std::swap(e.first, e.second);
    if (e.first < 0 || e.second >= n) {
      throw InvalidGraph("edge {" + std::to_string(e.first) + "," +
                         std::to_string(e.second) + "} out of range for n=" +
                         std::to_string(n));
    }
    if (e.first == e.second) {
      throw InvalidGraph("loop at vertex " + std::to_string(e.first));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidGraph("duplicate edge {" + std::to_string(dup->first) + "," +
                       std::to_string(dup->second) + "}");
  }

  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    rows_[row_offset(a) + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    rows_[row_offset(b) + (a >> 6)] |= std::uint64_t{1} << (a & 63);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back({a, b});
  return Graph(n, std::move(edges));
}

int Graph::count_common(Vertex u, Vertex v) const {
  const std::uint64_t* ru = rows_.data() + row_offset(u);
  const std::uint64_t* rv = rows_.data() + row_offset(v);
  int total = 0;
  for (std::size_t w = 0; w < words_; ++w) total += std::popcount(ru[w] & rv[w]);
  return total;
}

LineGraph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  // incident[v] = indices of edges touching v, ascending
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    incident[edges[i].first].push_back(i);
    incident[edges[i].second].push_back(i);
  }
  std::vector<Edge> out;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) out.push_back({inc[a], inc[b]});
  }
  // Two distinct edges of a simple graph share at most one endpoint, so no
  // pair is produced twice.
  return {Graph(static_cast<int>(edges.size()), std::move(out)), edges};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Vertex>> parts;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> part{s};
    seen[s] = 1;
    for (std::size_t head = 0; head < part.size(); ++head) {
      for (Vertex w : g.neighbors(part[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          part.push_back(w);
        }
      }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (position[a] >= 0 && position[b] >= 0) edges.push_back({position[a], position[b]});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

int common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw SameVertex(u);
  return g.count_common(u, v);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

std::set<int> degree_profile(const Graph& g) {
  std::set<int> out;
  for (Vertex v = 0; v < g.order(); ++v) out.insert(g.degree(v));
  return out;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw InvalidGraph("permutation length does not match graph order");
  }
  std::vector<int> hit(perm.size(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]++) throw InvalidGraph("not a permutation");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& [a, b] : g.edges()) edges.push_back({perm[a], perm[b]});
  return Graph(g.order(), std::move(edges));
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace graphs {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, std::move(e));
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, std::move(e));
}

}  // namespace graphs
}  // namespace flagspec
