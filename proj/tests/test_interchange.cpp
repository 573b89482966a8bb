#include <doctest.h>

#include "flagspec/catalog.hpp"
#include "flagspec/errors.hpp"
#include "flagspec/interchange.hpp"

using namespace flagspec;

TEST_CASE("design JSON") {
  const Design d = design_from_json(parse_json(R"({"v": 4, "blocks": [[2,1,0],[3,0,1],[0,2,3],[1,2,3]]})"));
  CHECK(d.block(0) == Block{0, 1, 2});
  CHECK_FALSE(d.allow_repeated_blocks());
  CHECK(validate_design(d) == DesignParams{4, 4, 3, 3, 2});
  for (const auto& id : catalog_ids()) {
    const Design e = get_design(id);
    CHECK(design_from_json(parse_json(dump_json(to_json(e)))) == e);
  }
  const Design r = design_from_json(parse_json(R"({"v": 3, "blocks": [[0,1]], "allow_repeated_blocks": true})"));
  CHECK(r.allow_repeated_blocks());
}

TEST_CASE("design JSON errors") {
  CHECK_THROWS_AS(parse_json("{"), ParseError);
  CHECK_THROWS_AS(design_from_json(parse_json(R"({"blocks": []})")), ParseError);
  CHECK_THROWS_AS(design_from_json(parse_json(R"({"v": "4", "blocks": []})")), ParseError);
  CHECK_THROWS_AS(design_from_json(parse_json(R"({"v": 4, "blocks": [[0, 9]]})")), MalformedDesign);
}

TEST_CASE("graph JSON") {
  const Graph g = graph_from_json(parse_json(R"({"n": 4, "edges": [[1,0],[2,3]]})"));
  CHECK(g == Graph::from_pairs(4, {{0, 1}, {2, 3}}));
  const Graph c = reference_graph("clebsch");
  CHECK(graph_from_json(parse_json(dump_json(to_json(c)))) == c);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 2, "edges": [[0,0]]})")), InvalidGraph);
  CHECK_THROWS_AS(graph_from_json(parse_json(R"({"n": 2, "edges": [[0]]})")), ParseError);
}

TEST_CASE("flag graph JSON") {
  const FlagGraph fg = gamma2(get_design("biplane-7-4-2"));
  const Json j = to_json(fg);
  CHECK(j.at("variant") == "gamma2");
  CHECK(j.at("flags").size() == 28);
  const FlagGraph back = flag_graph_from_json(parse_json(dump_json(j)));
  CHECK(back.graph == fg.graph);
  CHECK(back.flags == fg.flags);
  CHECK(back.variant == fg.variant);
  CHECK(back.source_design_params == fg.source_design_params);
}

TEST_CASE("profiles and reports") {
  const auto p = classify(gamma1(get_design("complete-6-20-10-3-4")).graph);
  CHECK(profile_from_json(parse_json(dump_json(to_json(p)))) == p);
  const auto report = check_against_prediction(p, predicted_gamma1_profile({6, 20, 10, 3, 4}));
  const Json r = to_json(report);
  CHECK(r.at("passed") == true);
  CHECK(r.at("checks").size() == report.checks.size());
  CHECK(to_json(predicted_gamma1_profile({6, 20, 10, 3, 4})).at("eta_set") == Json::array({1, 8}));
}

TEST_CASE("claims") {
  const SpectrumClaim c = formula_spectrum_gamma1({6, 20, 10, 3, 4});
  const SpectrumClaim back = claim_from_json(parse_json(dump_json(to_json(c))));
  CHECK(claim_to_polynomial(back) == claim_to_polynomial(c));
  CHECK(back.to_string() == c.to_string());

  const SpectrumClaim structured = claim_from_json(parse_json(R"({"entries": [
      {"a": "9/2", "b": "1/2", "d": 73, "multiplicity": 5},
      {"a": "9/2", "b": "-1/2", "d": 73, "multiplicity": 5},
      {"value": 1, "multiplicity": 14}]})"));
  CHECK(structured.entries().size() == 3);
  CHECK(structured.entries()[0].value == AlgebraicEigenvalue::parse("(9+√73)/2"));
  CHECK(structured.entries()[2].value == AlgebraicEigenvalue(Rational(1)));
  CHECK_THROWS_AS(claim_from_json(parse_json(R"({"entries": [{"value": "2", "multiplicity": 0}]})")), InvalidClaim);
  CHECK_THROWS_AS(claim_from_json(parse_json(R"({"entries": [{"value": "x", "multiplicity": 1}]})")), ParseError);
}

TEST_CASE("wide polynomial coefficients survive the round trip") {
  const IntPolynomial p = char_poly(gamma1(get_design("biplane-16-6-2-D1")).graph);
  bool wide = false;
  for (const auto& c : p.coefficients()) wide = wide || !c.fits_slong_p();
  REQUIRE(wide);
  const std::string text = dump_json(Json{{"coefficients", to_json(p)}});
  CHECK(text.find("\\u0001") == std::string::npos);
  CHECK(text.find('"' + p.coefficients()[0].get_str()) == std::string::npos);
  CHECK(text.find(p.coefficients()[0].get_str()) != std::string::npos);
  CHECK(polynomial_from_json(parse_json(text)) == p);
  CHECK(polynomial_from_json(parse_json("[-1, 0, 1]")) == IntPolynomial({Integer(-1), Integer(0), Integer(1)}));
  CHECK_THROWS_AS(polynomial_from_json(parse_json("[1.5]")), ParseError);
}

TEST_CASE("numeric clusters") {
  const Json j = to_json(numeric_spectrum(graphs::cycle(4), 1e-9));
  REQUIRE(j.size() == 3);
  CHECK(j[1].at("multiplicity") == 2);
  CHECK(j[0].at("certified") == true);
}

TEST_CASE("catalog records") {
  const auto e = get_entry("biplane-7-4-2");
  const std::string text = catalog_record_to_json(e.id, e.design, e.params, e.provenance);
  const CatalogRecord r = catalog_record_from_json(text);
  CHECK(r.id == e.id);
  CHECK(r.design == e.design);
  REQUIRE(r.params.has_value());
  CHECK(*r.params == e.params);
  CHECK(r.provenance == e.provenance);
}
