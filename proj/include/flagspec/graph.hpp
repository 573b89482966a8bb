#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace flagspec {

using Vertex = int;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Vertex first;
  Vertex second;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices [0, n). Immutable once built: the
/// edge list is kept sorted lexicographically and a dense bit-row adjacency
/// plus sorted neighbor lists are built at construction.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidGraph on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);
  /// Convenience for literals: pairs may arrive in either orientation.
  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    return (rows_[row_offset(u) + (v >> 6)] >> (v & 63)) & 1U;
  }
  /// |N(u) ∩ N(v)| by bit-row intersection; u == v is allowed here.
  int count_common(Vertex u, Vertex v) const;

  /// Dense adjacency matrix over any scalar type.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix() const {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a(i, j) = Scalar(0);
    for (const auto& e : edges_) {
      a(e.first, e.second) = Scalar(1);
      a(e.second, e.first) = Scalar(1);
    }
    return a;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t row_offset(Vertex v) const { return static_cast<std::size_t>(v) * words_; }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> rows_;
};

/// Line graph with the side table: vertex i of `graph` is `edges[i]` of the
/// source graph (lexicographic order).
struct LineGraph {
  Graph graph;
  std::vector<Edge> edges;
};

LineGraph line_graph(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by minimum vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Throws SameVertex when u == v.
int common_neighbors(const Graph& g, Vertex u, Vertex v);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

std::set<int> degree_profile(const Graph& g);

/// Relabels vertex v as perm[v]. `perm` must be a permutation of [0, n).
Graph permute(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

namespace graphs {
Graph cycle(int n);
Graph complete(int n);
Graph path(int n);
Graph star(int leaves);
}  // namespace graphs

// graph6 interchange (order < 258048).
std::string to_graph6(const Graph& g);
/// graph6 of the graph relabelled so that vertex order[i] becomes i.
std::string to_graph6(const Graph& g, std::span<const Vertex> order);
Graph from_graph6(std::string_view text);

}  // namespace flagspec
