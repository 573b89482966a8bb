#include <doctest.h>

#include <numeric>
#include <random>

#include "flagspec/catalog.hpp"
#include "flagspec/errors.hpp"
#include "flagspec/flag_graphs.hpp"
#include "flagspec/spectra.hpp"

using namespace flagspec;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Integer> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPolynomial(std::move(c));
}

IntPolynomial linear(long root) { return IntPolynomial::linear_factor(Integer(root)); }

AlgebraicEigenvalue val(const char* text) { return AlgebraicEigenvalue::parse(text); }

}  // namespace

TEST_CASE("polynomial basics") {
  const IntPolynomial p = poly({-2, -3, 0, 1});
  CHECK(p.degree() == 3);
  CHECK(p.is_monic());
  CHECK(p.to_string() == "x^3 - 3*x - 2");
  CHECK(p.evaluate(Integer(2)) == 0);
  CHECK(p.derivative() == poly({-3, 0, 3}));
  CHECK(linear(2) * linear(-1) * linear(-1) == p);
  CHECK(pow(linear(1), 3) == poly({-1, 3, -3, 1}));
  CHECK(IntPolynomial().degree() == -1);
  CHECK((p - p).is_zero());
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(graphs::cycle(4)) == poly({0, 0, -4, 0, 1}));
  CHECK(char_poly(graphs::complete(3)) == poly({-2, -3, 0, 1}));
  const IntPolynomial expected = linear(4) * pow(linear(2), 3) * pow(linear(0), 3) * pow(linear(-2), 5);
  CHECK(char_poly(gamma1(get_design("biplane-4-3-2")).graph) == expected);
  CHECK(char_poly(Graph(3, {})) == poly({0, 0, 0, 1}));
}

TEST_CASE("sparse and dense Berkowitz agree") {
  for (const Graph& g : {reference_graph("clebsch"), gamma2(get_design("biplane-7-4-2")).graph,
                         incidence_graph(get_design("fano-7-3-1"))}) {
    const auto dense = characteristic_polynomial(g.adjacency_matrix<Integer>());
    CHECK(dense == char_poly(g));
  }
  Eigen::Matrix<long long, 3, 3> m;
  m << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  // det(xI - M) = x^3 - 9x^2 + 24x - 18
  const auto p = characteristic_polynomial(m);
  CHECK(p.coefficients() == std::vector<long long>{-18, 24, -9, 1});
  CHECK(determinant(m) == 18);
}

TEST_CASE("Bareiss determinant") {
  Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic> m(3, 3);
  m << 0, 2, 1, 3, 0, 4, 1, 1, 0;
  CHECK(determinant(m) == 11);
  CHECK(determinant(graphs::cycle(4).adjacency_matrix<Integer>()) == 0);
  CHECK(determinant(graphs::complete(4).adjacency_matrix<Integer>()) == -3);
}

TEST_CASE("char-poly audit on every constructed graph") {
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.id);
    std::vector<Graph> graphs{incidence_graph(e.design), gamma1(e.design).graph};
    if (e.params.biplane()) graphs.push_back(gamma2(e.design).graph);
    for (const auto& g : graphs) {
      const auto p = char_poly(g);
      const auto audit = audit_char_poly(g, p);
      CHECK(audit.monic_of_order);
      CHECK(audit.constant_is_det);
      CHECK(audit.trace_free);
      CHECK(audit.edge_coefficient);
    }
  }
  CHECK_FALSE(audit_char_poly(graphs::cycle(4), poly({0, 0, -3, 0, 1})).passed());
}

TEST_CASE("algebraic eigenvalues") {
  const AlgebraicEigenvalue x(Rational(9, 2), Rational(1, 2), Integer(73));
  CHECK(x.to_string() == "9/2+1/2√73");
  CHECK(val("(9+√73)/2") == x);
  CHECK(val("(9-sqrt(73))/2") == x.conjugate());
  CHECK(val("9/2+1/2*√73") == x);
  CHECK(val("1+2√2") == AlgebraicEigenvalue(Rational(1), Rational(2), Integer(2)));
  CHECK(val("√8") == AlgebraicEigenvalue(Rational(0), Rational(2), Integer(2)));
  CHECK(val("√9") == AlgebraicEigenvalue(Rational(3)));
  CHECK(val("-√6").to_string() == "-√6");
  CHECK(val("-2").to_string() == "-2");
  CHECK(val("2-√2").to_string() == "2-√2");
  CHECK(val("√30").approx() == doctest::Approx(5.477225575));
  CHECK(AlgebraicEigenvalue(Rational(1), Rational(3), Integer(1)) == AlgebraicEigenvalue(Rational(4)));
  CHECK(AlgebraicEigenvalue(Rational(0), Rational(5), Integer(0)) == AlgebraicEigenvalue(Rational(0)));
  CHECK_THROWS_AS(AlgebraicEigenvalue(Rational(0), Rational(1), Integer(-3)), InvalidClaim);
  CHECK_THROWS_AS(val("abc"), ParseError);
  CHECK_THROWS_AS(val(""), ParseError);
  for (const char* text : {"0", "7/3", "-1/2√5", "3+√3", "-4-5/7√11"}) CHECK(val(val(text).to_string().c_str()) == val(text));
}

TEST_CASE("spectrum claims") {
  SpectrumClaim c;
  c.add(val("2"), 1).add(val("-2"), 1).add(val("0"), 1).add(val("0"), 1).add(val("5"), 0);
  CHECK(c.entries().size() == 3);
  CHECK(c.total_multiplicity() == 4);
  CHECK(c.to_string() == "2, 0^2, -2");
  CHECK(claim_to_polynomial(c) == poly({0, 0, -4, 0, 1}));

  SpectrumClaim pairs;
  pairs.add(val("6"), 1).add_pair(val("2+√2"), 6).add(val("-2"), 15);
  CHECK(pairs.total_multiplicity() == 28);
  CHECK(pairs.to_string() == "6, (2+√2)^6, (2-√2)^6, (-2)^15");
  CHECK(claim_to_polynomial(pairs) == linear(6) * pow(poly({2, -4, 1}), 6) * pow(linear(-2), 15));
}

TEST_CASE("claim_to_polynomial errors") {
  SpectrumClaim half;
  half.add(AlgebraicEigenvalue(Rational(1, 2)), 2);
  CHECK_THROWS_AS(claim_to_polynomial(half), NonIntegralClaim);

  SpectrumClaim lonely;
  lonely.add(val("1+√2"), 1);
  CHECK_THROWS_AS(claim_to_polynomial(lonely), InvalidClaim);

  SpectrumClaim unbalanced;
  unbalanced.add(val("1+√2"), 2).add(val("1-√2"), 1);
  CHECK_THROWS_AS(claim_to_polynomial(unbalanced), InvalidClaim);

  // Conjugate pair with a non-integral product: x^2 - x - 1/2... from (1/2 ± √3/2).
  SpectrumClaim odd;
  odd.add_pair(val("(1+√3)/2"), 1);
  CHECK_THROWS_AS(claim_to_polynomial(odd), NonIntegralClaim);

  // Golden ratio pair is integral even though a is not.
  SpectrumClaim golden;
  golden.add_pair(val("(1+√5)/2"), 1);
  CHECK(claim_to_polynomial(golden) == poly({-1, -1, 1}));
}

TEST_CASE("verify_spectrum examples") {
  SpectrumClaim eleven;
  eleven.add(val("8"), 1).add_pair(val("3+√3"), 10).add(val("-2"), 34);
  CHECK(verify_spectrum(gamma1(get_design("biplane-11-5-2")).graph, eleven));

  SpectrumClaim sixteen;
  sixteen.add(val("10"), 1).add(val("6"), 15).add(val("2"), 15).add(val("-2"), 65);
  CHECK(verify_spectrum(gamma1(get_design("biplane-16-6-2-D2")).graph, sixteen));

  SpectrumClaim wrong;
  wrong.add(val("4"), 1).add(val("2"), 3).add(val("0"), 4).add(val("-2"), 4);
  CHECK_FALSE(verify_spectrum(gamma1(get_design("biplane-4-3-2")).graph, wrong));

  SpectrumClaim short_claim;
  short_claim.add(val("4"), 1);
  CHECK_THROWS_AS(verify_spectrum(gamma1(get_design("biplane-4-3-2")).graph, short_claim), InvalidClaim);
}

TEST_CASE("formula_spectrum_incidence") {
  const auto c = formula_spectrum_incidence({6, 20, 10, 3, 4});
  CHECK(c.to_string() == "√30, (√6)^5, 0^14, (-√6)^5, -√30");
  const auto s = formula_spectrum_incidence({11, 11, 5, 5, 2});
  CHECK(s.to_string() == "5, (√3)^10, (-√3)^10, -5");
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.id);
    const auto claim = formula_spectrum_incidence(e.params);
    CHECK(claim.total_multiplicity() == e.params.v + e.params.b);
    CHECK(verify_spectrum(incidence_graph(e.design), claim));
  }
}

TEST_CASE("formula_spectrum_gamma1") {
  CHECK(formula_spectrum_gamma1({6, 20, 10, 3, 4}).to_string() ==
        "11, (9/2+1/2√73)^5, 1^14, (9/2-1/2√73)^5, (-2)^35");
  CHECK(formula_spectrum_gamma1({11, 11, 5, 5, 2}).to_string() == "8, (3+√3)^10, (3-√3)^10, (-2)^34");
  CHECK(formula_spectrum_gamma1({7, 7, 4, 4, 2}).to_string() == "6, (2+√2)^6, (2-√2)^6, (-2)^15");
  for (const auto& e : catalog_entries()) {
    CAPTURE(e.id);
    CHECK(verify_spectrum(gamma1(e.design).graph, formula_spectrum_gamma1(e.params)));
  }
}

TEST_CASE("the minus-sign discriminant does not match the computed polynomial") {
  const Graph g = gamma1(get_design("complete-6-20-10-3-4")).graph;
  // (k-r)^2 - 4(r-lambda) = 25 gives (9 ± 5)/2 = 7, 2
  SpectrumClaim minus;
  minus.add(val("11"), 1).add(val("7"), 5).add(val("2"), 5).add(val("1"), 14).add(val("-2"), 35);
  CHECK_FALSE(verify_spectrum(g, minus));
}

TEST_CASE("cospectral") {
  const Graph d1 = gamma1(get_design("biplane-16-6-2-D1")).graph;
  const Graph d2 = gamma1(get_design("biplane-16-6-2-D2")).graph;
  CHECK(cospectral(d1, d2));
  CHECK_FALSE(cospectral(graphs::cycle(4), graphs::complete(3)));
  CHECK_FALSE(cospectral(graphs::cycle(4), graphs::path(4)));
  std::mt19937 rng(11);
  std::vector<Vertex> perm(96);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  CHECK(cospectral(d1, permute(d1, perm)));
  // Smallest cospectral pair: K_{1,4} and C4 + K1.
  CHECK(cospectral(graphs::star(4), Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})));
}

TEST_CASE("numeric_spectrum") {
  const auto clebsch = numeric_spectrum(reference_graph("clebsch"), 1e-9);
  REQUIRE(clebsch.size() == 3);
  CHECK(clebsch[0].value == doctest::Approx(5.0));
  CHECK(clebsch[0].multiplicity == 1);
  CHECK(clebsch[1].value == doctest::Approx(1.0));
  CHECK(clebsch[1].multiplicity == 10);
  CHECK(clebsch[2].value == doctest::Approx(-3.0));
  CHECK(clebsch[2].multiplicity == 5);
  for (const auto& c : clebsch) CHECK(c.certified);

  const auto c4 = numeric_spectrum(graphs::cycle(4), 1e-9);
  REQUIRE(c4.size() == 3);
  CHECK(c4[1].value == doctest::Approx(0.0));
  CHECK(c4[1].multiplicity == 2);

  const Graph d2 = gamma2(get_design("biplane-16-6-2-D2")).graph;
  const auto parts = connected_components(d2);
  SpectrumClaim expected;
  expected.add(val("5"), 1).add(val("1"), 18).add_pair(val("1+2√2"), 2).add(val("-3"), 9);
  for (const auto& part : parts) {
    const auto clusters = numeric_spectrum(induced_subgraph(d2, part), 1e-9);
    CHECK(numeric_matches_claim(clusters, expected, 1e-9));
  }
}

TEST_CASE("numeric_matches_claim detects disagreement") {
  const auto clusters = numeric_spectrum(graphs::cycle(4), 1e-9);
  SpectrumClaim right;
  right.add(val("2"), 1).add(val("0"), 2).add(val("-2"), 1);
  CHECK(numeric_matches_claim(clusters, right, 1e-9));
  SpectrumClaim wrong;
  wrong.add(val("2"), 2).add(val("0"), 1).add(val("-2"), 1);
  CHECK_FALSE(numeric_matches_claim(clusters, wrong, 1e-9));
}

TEST_CASE("Sturm root counting") {
  const IntPolynomial p = poly({0, 0, -4, 0, 1});  // roots -2, 0 (double), 2
  CHECK(count_distinct_roots(p, Rational(-3), Rational(3)) == 3);
  CHECK(count_distinct_roots(p, Rational(-2), Rational(2)) == 2);
  CHECK(count_distinct_roots(p, Rational(-1, 2), Rational(1, 2)) == 1);
  CHECK(count_distinct_roots(p, Rational(1, 3), Rational(1)) == 0);
  const IntPolynomial q = poly({-2, 0, 1});
  CHECK(count_distinct_roots(q, Rational(141, 100), Rational(142, 100)) == 1);
  CHECK(count_distinct_roots(q, Rational(142, 100), Rational(2)) == 0);
}
