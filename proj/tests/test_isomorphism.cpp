#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "flagspec/catalog.hpp"
#include "flagspec/flag_graphs.hpp"
#include "flagspec/isomorphism.hpp"
#include "flagspec/spectra.hpp"

using namespace flagspec;

namespace {

std::vector<Vertex> shuffled(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Design shuffled_design(const Design& d, std::mt19937_64& rng) {
  return relabel(d, shuffled(d.points(), rng), shuffled(d.block_count(), rng));
}

}  // namespace

TEST_CASE("canonical form is a relabelling of the input") {
  const Graph g = gamma1(get_design("biplane-7-4-2")).graph;
  const CanonicalForm form = canonical_form(g);
  const Graph c = canonical_graph(g, form);
  CHECK(to_graph6(c) == form.certificate);
  CHECK(permute(g, form.permutation) == c);
}

TEST_CASE("canonical form invariance on Γ1(7,4,2)") {
  const Graph g = gamma1(get_design("biplane-7-4-2")).graph;
  const std::string reference = canonical_form(g).certificate;
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) CHECK(canonical_form(permute(g, shuffled(g.order(), rng))).certificate == reference);
}

TEST_CASE("small certificates") {
  CHECK(canonical_form(graphs::cycle(4)).certificate != canonical_form(graphs::complete(3)).certificate);
  CHECK(canonical_form(line_graph(graphs::complete(3)).graph).certificate ==
        canonical_form(line_graph(graphs::star(3)).graph).certificate);
  CHECK(canonical_form(Graph(0, {})).certificate == "?");
  CHECK(canonical_form(Graph(1, {})).certificate == "@");
  CHECK(is_isomorphic(graphs::path(4), Graph::from_pairs(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK_FALSE(is_isomorphic(graphs::path(4), graphs::star(3)));
}

TEST_CASE("cospectral but not isomorphic") {
  const Graph star = graphs::star(4);
  const Graph c4k1 = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(cospectral(star, c4k1));
  CHECK_FALSE(is_isomorphic(star, c4k1));
}

TEST_CASE("regular graphs that refinement cannot split") {
  // Two triangles versus a hexagon; the Petersen graph versus a relabelling.
  const Graph two_triangles = Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK_FALSE(is_isomorphic(two_triangles, graphs::cycle(6)));
  const Graph petersen = Graph::from_pairs(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  std::mt19937_64 rng(5);
  CHECK(is_isomorphic(petersen, permute(petersen, shuffled(10, rng))));
  CanonicalStats stats;
  canonical_form(petersen, &stats);
  CHECK(stats.leaves >= 1);
  CHECK(stats.automorphisms >= 1);
}

TEST_CASE("coloured canonical forms respect colours") {
  const Graph p = graphs::path(3);
  const std::vector<int> end_coloured{1, 0, 0};
  const std::vector<int> mid_coloured{0, 1, 0};
  const std::vector<int> other_end{0, 0, 1};
  CHECK(canonical_form(p, end_coloured).certificate == canonical_form(p, other_end).certificate);
  CHECK(canonical_form(p, end_coloured).certificate != canonical_form(p, mid_coloured).certificate);
  CHECK(canonical_form(p, end_coloured).certificate != canonical_form(p).certificate);
}

TEST_CASE("isomorphism examples") {
  const Graph d1 = gamma1(get_design("biplane-16-6-2-D1")).graph;
  const Graph d2 = gamma1(get_design("biplane-16-6-2-D2")).graph;
  CHECK_FALSE(is_isomorphic(d1, d2));
  CHECK(is_isomorphic(gamma2(get_design("biplane-7-4-2")).graph, reference_graph("coxeter")));
  const Graph g2 = gamma2(get_design("biplane-16-6-2-D1")).graph;
  const Graph clebsch = reference_graph("clebsch");
  for (const auto& part : connected_components(g2)) CHECK(is_isomorphic(induced_subgraph(g2, part), clebsch));
}

TEST_CASE("design_isomorphic examples") {
  const Design d1 = get_design("biplane-16-6-2-D1");
  const Design d2 = get_design("biplane-16-6-2-D2");
  const Design d3 = get_design("biplane-16-6-2-D3");
  CHECK_FALSE(design_isomorphic(d1, d2));
  CHECK_FALSE(design_isomorphic(d1, d3));
  CHECK_FALSE(design_isomorphic(d2, d3));
  std::mt19937_64 rng(9);
  for (const auto& id : catalog_ids()) {
    const Design d = get_design(id);
    CHECK(design_isomorphic(d, shuffled_design(d, rng)));
  }
  CHECK_FALSE(design_isomorphic(get_design("biplane-4-3-2"), get_design("biplane-7-4-2")));
}

TEST_CASE("design isomorphism excludes dualities") {
  const Design fano = get_design("fano-7-3-1");
  std::vector<Block> dual_blocks(7);
  for (int j = 0; j < 7; ++j)
    for (int p : fano.block(j)) dual_blocks[p].push_back(j);
  const Design dual(7, dual_blocks);
  CHECK(design_isomorphic(fano, dual));  // the plane is self-dual

  // An incidence structure and its dual have isomorphic uncoloured incidence
  // graphs, but no point bijection relates them.
  const Design s(3, {{0, 1, 2}, {0}, {1}});
  const Design t(3, {{0, 1}, {0, 2}, {0}});
  CHECK(is_isomorphic(incidence_graph(s), incidence_graph(t)));
  CHECK(design_canonical_form(s).certificate != design_canonical_form(t).certificate);
}

TEST_CASE("design, Γ1 and Γ2 isomorphism agree on the 16-point biplanes and relabellings") {
  std::mt19937_64 rng(77);
  std::vector<Design> designs;
  for (const auto& id : {"biplane-16-6-2-D1", "biplane-16-6-2-D2", "biplane-16-6-2-D3"}) {
    designs.push_back(get_design(id));
    designs.push_back(shuffled_design(designs.back(), rng));
  }
  for (std::size_t i = 0; i < designs.size(); ++i) {
    for (std::size_t j = i + 1; j < designs.size(); ++j) {
      const bool iso = design_isomorphic(designs[i], designs[j]);
      CHECK(iso == (i / 2 == j / 2));
      CHECK(iso == is_isomorphic(gamma1(designs[i]).graph, gamma1(designs[j]).graph));
      CHECK(iso == is_isomorphic(gamma2(designs[i]).graph, gamma2(designs[j]).graph));
    }
  }
}

TEST_CASE("isomorphic graphs are cospectral") {
  std::mt19937_64 rng(1);
  for (const auto& id : {"biplane-11-5-2", "complete-6-20-10-3-4"}) {
    const Graph g = gamma1(get_design(id)).graph;
    const Graph h = permute(g, shuffled(g.order(), rng));
    CHECK(is_isomorphic(g, h));
    CHECK(cospectral(g, h));
  }
}

namespace {

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (permute(g, p) == h) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.push_back({i, j});
  return Graph(n, edges);
}

Graph cayley_z4z4(const std::vector<std::pair<int, int>>& connection) {
  std::vector<Edge> edges;
  for (int x = 0; x < 16; ++x) {
    for (const auto& [a, b] : connection) {
      const int y = ((x / 4 + a + 4) % 4) * 4 + (x % 4 + b + 4) % 4;
      if (x < y) edges.push_back({x, y});
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(16, edges);
}

}  // namespace

TEST_CASE("canonical forms agree with brute force on small random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 5;
    const Graph g = random_graph(n, 0.5, rng);
    // Half the time compare against a relabelling with one edge toggled.
    Graph h = permute(g, shuffled(n, rng));
    if (trial % 2 == 1) {
      std::vector<Edge> edges = h.edges();
      const Edge flip{0, 1};
      auto it = std::find(edges.begin(), edges.end(), flip);
      if (it != edges.end()) {
        edges.erase(it);
      } else {
        edges.push_back(flip);
      }
      h = Graph(n, edges);
    }
    CHECK(is_isomorphic(g, h) == brute_force_isomorphic(g, h));
  }
}

TEST_CASE("Shrikhande and the 4x4 rook graph share parameters but not isomorphism class") {
  const Graph shrikhande = cayley_z4z4({{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}});
  const Graph rook = cayley_z4z4({{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3}});
  CHECK(cospectral(shrikhande, rook));
  CHECK_FALSE(is_isomorphic(shrikhande, rook));
  std::mt19937_64 rng(8);
  CHECK(is_isomorphic(rook, permute(rook, shuffled(16, rng))));
  CHECK(is_isomorphic(shrikhande, permute(shrikhande, shuffled(16, rng))));
}
