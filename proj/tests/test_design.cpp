#include <doctest.h>

#include <algorithm>
#include <set>

#include "flagspec/catalog.hpp"
#include "flagspec/design.hpp"
#include "flagspec/errors.hpp"

using namespace flagspec;

namespace {

Design three_subsets_of_four() { return Design(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

}  // namespace

TEST_CASE("derive_params") {
  CHECK(derive_params(11, 5, 2) == DesignParams{11, 11, 5, 5, 2});
  CHECK(derive_params(6, 3, 4) == DesignParams{6, 20, 10, 3, 4});
  CHECK(derive_params(7, 3, 1) == DesignParams{7, 7, 3, 3, 1});
  CHECK_THROWS_AS(derive_params(8, 3, 1), NonIntegralParams);
  // r integral, b not: r = 2*5/2 = 5, b = 6*5/4
  CHECK_THROWS_AS(derive_params(6, 4, 2), NonIntegralParams);
}

TEST_CASE("params identities and rendering") {
  const DesignParams p{6, 20, 10, 3, 4};
  CHECK(p.satisfies_identities());
  CHECK_FALSE(p.symmetric());
  CHECK(p.to_string() == "(6,20,10,3,4)");
  CHECK(DesignParams{16, 16, 6, 6, 2}.biplane());
  CHECK_FALSE(DesignParams{7, 7, 3, 3, 1}.biplane());
}

TEST_CASE("validate_design accepts the small examples") {
  CHECK(validate_design(three_subsets_of_four()) == DesignParams{4, 4, 3, 3, 2});
  Design complements(7, {{0, 3, 5, 6}, {1, 4, 6, 0}, {2, 5, 0, 1}, {3, 6, 1, 2},
                         {4, 0, 2, 3}, {5, 1, 3, 4}, {6, 2, 4, 5}});
  CHECK(validate_design(complements) == DesignParams{7, 7, 4, 4, 2});
}

TEST_CASE("validate_design rejections") {
  SUBCASE("a deleted block breaks pair counts") {
    for (int drop = 0; drop < 4; ++drop) {
      auto blocks = three_subsets_of_four().blocks();
      blocks.erase(blocks.begin() + drop);
      CHECK_THROWS_AS(validate_design(Design(4, blocks)), PairCountMismatch);
    }
  }
  SUBCASE("pair count details") {
    try {
      validate_design(Design(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}}));
      FAIL("expected PairCountMismatch");
    } catch (const PairCountMismatch& e) {
      CHECK(e.expected() == 2);
      CHECK(e.found() == 1);
      CHECK(e.pair() == std::pair<int, int>{1, 2});
      CHECK(e.kind() == "PairCountMismatch");
    }
  }
  SUBCASE("unequal sizes") {
    CHECK_THROWS_AS(validate_design(Design(4, {{0, 1}, {0, 1, 2}})), UnequalBlockSizes);
  }
  SUBCASE("repeated blocks follow the policy") {
    std::vector<Block> twice;
    const Design base = three_subsets_of_four();
    for (const auto& b : base.blocks()) {
      twice.push_back(b);
      twice.push_back(b);
    }
    try {
      validate_design(Design(4, twice));
      FAIL("expected RepeatedBlock");
    } catch (const RepeatedBlock& e) {
      CHECK(e.index() == 1);
    }
    CHECK(validate_design(Design(4, twice, true)) == DesignParams{4, 8, 6, 3, 4});
  }
  SUBCASE("trivial designs") {
    CHECK_THROWS_AS(validate_design(Design(3, {{0}, {1}, {2}})), TrivialDesign);
    CHECK_THROWS_AS(validate_design(Design(3, {{0, 1, 2}})), TrivialDesign);
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(Design(3, {{0, 3}}), MalformedDesign);
    CHECK_THROWS_AS(Design(3, {{0, 0}}), MalformedDesign);
    CHECK_THROWS_AS(Design(3, {{-1, 2}}), MalformedDesign);
    CHECK_THROWS_AS(Design(3, {}), MalformedDesign);
  }
}

TEST_CASE("blocks are stored sorted in their given order") {
  Design d(5, {{4, 0, 2}, {3, 1, 0}});
  CHECK(d.block(0) == Block{0, 2, 4});
  CHECK(d.block(1) == Block{0, 1, 3});
  CHECK(d.contains(0, 4));
  CHECK_FALSE(d.contains(1, 4));
}

TEST_CASE("design_from_difference_set") {
  const std::vector<int> qr{1, 3, 4, 5, 9};
  CHECK(validate_design(design_from_difference_set(11, qr)) == DesignParams{11, 11, 5, 5, 2});
  const std::vector<int> fano{1, 2, 4};
  Design f = design_from_difference_set(7, fano);
  CHECK(validate_design(f) == DesignParams{7, 7, 3, 3, 1});
  CHECK(f.block(1) == Block{2, 3, 5});
  const std::vector<int> bad{0, 1, 2};
  CHECK_THROWS_AS(design_from_difference_set(7, bad), PairCountMismatch);
}

TEST_CASE("groups") {
  const auto q = FiniteGroup::quaternion();
  CHECK(q.order() == 8);
  const int i = 1, j = 2, k = 3, minus_one = 4;
  CHECK(q.multiply(i, j) == k);
  CHECK(q.multiply(j, i) == k + 4);
  CHECK(q.multiply(i, i) == minus_one);
  for (int x = 0; x < 8; ++x) CHECK(q.multiply(x, q.inverse(x)) == 0);

  const auto z = FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(4));
  CHECK(z.order() == 16);
  CHECK(z.multiply(1 * 4 + 3, 2 * 4 + 2) == 3 * 4 + 1);
}

TEST_CASE("every catalog construction round-trips through validation") {
  for (const auto& c : catalog_constructions()) {
    CAPTURE(c.id);
    const auto p = validate_design(c.design);
    CHECK(p.satisfies_identities());
  }
}

TEST_CASE("enumerate_flags") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.id);
    const auto flags = enumerate_flags(e.design);
    CHECK(static_cast<int>(flags.size()) == e.params.b * e.params.k);
    CHECK(static_cast<int>(flags.size()) == e.params.v * e.params.r);
    CHECK(std::is_sorted(flags.begin(), flags.end(), [](const Flag& a, const Flag& b) {
      return std::pair(a.block_index, a.point) < std::pair(b.block_index, b.point);
    }));
    for (const auto& f : flags) CHECK(e.design.contains(f.block_index, f.point));
  }
  CHECK(enumerate_flags(get_design("biplane-4-3-2")).size() == 12);
  CHECK(enumerate_flags(get_design("biplane-16-6-2-D1")).size() == 96);
}

TEST_CASE("incidence_graph") {
  SUBCASE("(4,3,2)") {
    const Graph g = incidence_graph(three_subsets_of_four());
    CHECK(g.order() == 8);
    CHECK(g.size() == 12);
    CHECK(degree_profile(g) == std::set<int>{3});
  }
  SUBCASE("complete (6,20,10,3,4)") {
    const Graph g = incidence_graph(complete_design(6, 3));
    CHECK(g.order() == 26);
    CHECK(g.size() == 60);
    for (int p = 0; p < 6; ++p) CHECK(g.degree(p) == 10);
    for (int j = 6; j < 26; ++j) CHECK(g.degree(j) == 3);
  }
  SUBCASE("(7,4,2)") {
    const Graph g = incidence_graph(get_design("biplane-7-4-2"));
    CHECK(g.order() == 14);
    CHECK(g.size() == 28);
    CHECK(degree_profile(g) == std::set<int>{4});
  }
  SUBCASE("bipartite, biregular and connected on the catalog") {
    for (const auto& e : catalog_entries()) {
      CAPTURE(e.id);
      const Graph g = incidence_graph(e.design);
      const int v = e.params.v;
      for (const auto& edge : g.edges()) CHECK((edge.first < v && edge.second >= v));
      for (int x = 0; x < g.order(); ++x) CHECK(g.degree(x) == (x < v ? e.params.r : e.params.k));
      CHECK(is_connected(g));
    }
  }
}

TEST_CASE("relabel") {
  const Design d = get_design("fano-7-3-1");
  const std::vector<int> points{6, 5, 4, 3, 2, 1, 0};
  const std::vector<int> order{6, 5, 4, 3, 2, 1, 0};
  const Design e = relabel(d, points, order);
  CHECK(validate_design(e) == validate_design(d));
  // old block 6 = {0,1,3} maps to {6,5,3}
  CHECK(e.block(0) == Block{3, 5, 6});
}

TEST_CASE("complete_design") {
  const Design d = complete_design(5, 2);
  CHECK(d.block_count() == 10);
  CHECK(d.block(0) == Block{0, 1});
  CHECK(d.block(9) == Block{3, 4});
  CHECK(validate_design(d) == DesignParams{5, 10, 4, 2, 1});
}
