#include "flagspec/reproduction.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>

#include "flagspec/catalog.hpp"
#include "flagspec/errors.hpp"
#include "flagspec/isomorphism.hpp"

namespace flagspec {

namespace {

const std::vector<std::string> kSixteen = {"biplane-16-6-2-D1", "biplane-16-6-2-D2", "biplane-16-6-2-D3"};

// "x±y" expands to the two conjugates.
SpectrumClaim claim(std::initializer_list<std::pair<std::string, int>> entries) {
  SpectrumClaim out;
  for (const auto& [text, m] : entries) {
    const std::string pm = "±";
    if (auto at = text.find(pm); at != std::string::npos) {
      std::string plus = text, minus = text;
      plus.replace(at, pm.size(), "+");
      minus.replace(at, pm.size(), "-");
      out.add(AlgebraicEigenvalue::parse(plus), m);
      out.add(AlgebraicEigenvalue::parse(minus), m);
    } else {
      out.add(AlgebraicEigenvalue::parse(text), m);
    }
  }
  return out;
}

const std::map<std::string, SpectrumClaim>& gamma1_claims() {
  static const std::map<std::string, SpectrumClaim> claims = [] {
    std::map<std::string, SpectrumClaim> m;
    m["biplane-4-3-2"] = claim({{"4", 1}, {"2", 3}, {"0", 3}, {"-2", 5}});
    m["biplane-7-4-2"] = claim({{"6", 1}, {"2±√2", 6}, {"-2", 15}});
    m["biplane-11-5-2"] = claim({{"8", 1}, {"3±√3", 10}, {"-2", 34}});
    for (const auto& id : kSixteen) m[id] = claim({{"10", 1}, {"6", 15}, {"2", 15}, {"-2", 65}});
    m["complete-6-20-10-3-4"] = claim({{"11", 1}, {"(9±√73)/2", 5}, {"1", 14}, {"-2", 35}});
    return m;
  }();
  return claims;
}

SpectrumClaim complete_incidence_claim() {
  return claim({{"√30", 1}, {"√6", 5}, {"0", 14}, {"-√6", 5}, {"-√30", 1}});
}
SpectrumClaim clebsch_claim() { return claim({{"5", 1}, {"1", 10}, {"-3", 5}}); }
SpectrumClaim d2_component_claim() { return claim({{"5", 1}, {"1", 18}, {"1±2√2", 2}, {"-3", 9}}); }
SpectrumClaim d3_large_claim() { return claim({{"5", 1}, {"1", 34}, {"1±2√2", 6}, {"-3", 17}}); }
SpectrumClaim d3_small_claim() { return claim({{"5", 1}, {"3", 4}, {"1", 14}, {"-1", 4}, {"-3", 9}}); }

// Everything derived from the catalog, built once per run.
struct Workbench {
  struct Item {
    CatalogEntry entry;
    Graph incidence;
    FlagGraph g1;
    std::optional<FlagGraph> g2;
  };
  std::vector<Item> items;

  Workbench() {
    for (auto& e : catalog_entries()) {
      Item item{e, incidence_graph(e.design), gamma1(e.design), std::nullopt};
      if (e.params.biplane()) item.g2 = gamma2(e.design);
      items.push_back(std::move(item));
    }
  }

  const Item& at(const std::string& id) const {
    for (const auto& item : items)
      if (item.entry.id == id) return item;
    throw UnknownCatalogId(id);
  }

  static const Workbench& get() {
    static const Workbench bench;
    return bench;
  }
};

struct Checker {
  CriterionResult& result;
  int total = 0;
  int failed = 0;

  void operator()(bool ok, const std::string& what) {
    ++total;
    if (!ok) {
      ++failed;
      result.notes.push_back("FAILED: " + what);
    }
  }
  void finish() {
    result.passed = failed == 0 && total > 0;
    result.notes.push_back(std::to_string(total - failed) + "/" + std::to_string(total) + " checks passed");
  }
};

std::vector<Graph> component_graphs(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : connected_components(g)) out.push_back(induced_subgraph(g, c));
  return out;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

Design random_relabel(const Design& d, std::mt19937_64& rng) {
  auto points = random_permutation(d.points(), rng);
  auto blocks = random_permutation(d.block_count(), rng);
  return relabel(d, points, blocks);
}

void criterion1(Checker& check) {
  const auto& bench = Workbench::get();
  for (const auto& item : bench.items) {
    if (!item.entry.params.biplane()) continue;
    const auto& id = item.entry.id;
    check(verify_spectrum(item.g1.graph, gamma1_claims().at(id)), "Γ1 spectrum of " + id);
  }
}

void criterion2(Checker& check) {
  const auto& item = Workbench::get().at("complete-6-20-10-3-4");
  check(verify_spectrum(item.incidence, complete_incidence_claim()), "incidence spectrum of the complete design");
  const IntPolynomial p = char_poly(item.g1.graph);
  check(verify_spectrum(p, gamma1_claims().at(item.entry.id)), "Γ1 spectrum of the complete design");
  check(verify_spectrum(p, formula_spectrum_gamma1(item.entry.params)),
        "Γ1 formula with discriminant (k-r)^2 + 4(r-λ)");
  check(!verify_spectrum(p, claim({{"11", 1}, {"7", 5}, {"2", 5}, {"1", 14}, {"-2", 35}})),
        "Γ1 formula with discriminant (k-r)^2 - 4(r-λ) must be rejected");
  check(verify_spectrum(item.incidence, formula_spectrum_incidence(item.entry.params)),
        "incidence formula for the complete design");
}

void criterion3(Checker& check) {
  for (const auto& item : Workbench::get().items) {
    const auto report = check_against_prediction(classify(item.g1.graph), predicted_gamma1_profile(item.entry.params));
    for (const auto& c : report.checks) check(c.passed, item.entry.id + " Γ1 " + c.field + ": " + c.detail);
  }
}

void criterion4(Checker& check) {
  for (const auto& item : Workbench::get().items) {
    if (!item.g2) continue;
    const auto report = check_against_prediction(classify(item.g2->graph), predicted_gamma2_profile(item.entry.params));
    for (const auto& c : report.checks) check(c.passed, item.entry.id + " Γ2 " + c.field + ": " + c.detail);
  }
}

void criterion5(Checker& check) {
  const auto& bench = Workbench::get();

  const auto small = component_graphs(bench.at("biplane-4-3-2").g2->graph);
  check(small.size() == 3, "Γ2(4,3,2) has three components");
  for (const auto& c : small) check(is_isomorphic(c, graphs::cycle(4)), "Γ2(4,3,2) component is C4");

  const Graph& coxeter = bench.at("biplane-7-4-2").g2->graph;
  check(is_connected(coxeter), "Γ2(7,4,2) is connected");
  check(degree_profile(coxeter) == std::set<int>{3}, "Γ2(7,4,2) is 3-regular");
  check(girth(coxeter) == 7, "Γ2(7,4,2) has girth 7");

  const Graph clebsch = reference_graph("clebsch");
  const auto clebsch_profile = classify(clebsch);
  check(clebsch.order() == 16 && clebsch_profile.classification == Classification::SRG &&
            clebsch_profile.degrees == std::set<int>{5} && clebsch_profile.eta_set == std::set<int>{0} &&
            clebsch_profile.mu_set == std::set<int>{2},
        "Clebsch reference is SRG(16,5,0,2)");
  check(verify_spectrum(clebsch, clebsch_claim()), "Clebsch spectrum");

  const auto d1 = component_graphs(bench.at("biplane-16-6-2-D1").g2->graph);
  check(d1.size() == 6, "Γ2(D1) has six components");
  for (const auto& c : d1) check(is_isomorphic(c, clebsch), "Γ2(D1) component is Clebsch");

  const auto d2 = component_graphs(bench.at("biplane-16-6-2-D2").g2->graph);
  check(d2.size() == 3, "Γ2(D2) has three components");
  for (std::size_t i = 0; i < d2.size(); ++i) {
    check(d2[i].order() == 32, "Γ2(D2) component has 32 vertices");
    check(verify_spectrum(d2[i], d2_component_claim()), "Γ2(D2) component spectrum");
    for (std::size_t j = i + 1; j < d2.size(); ++j) check(is_isomorphic(d2[i], d2[j]), "Γ2(D2) components isomorphic");
  }

  auto d3 = component_graphs(bench.at("biplane-16-6-2-D3").g2->graph);
  check(d3.size() == 2, "Γ2(D3) has two components");
  if (d3.size() == 2) {
    std::sort(d3.begin(), d3.end(), [](const Graph& a, const Graph& b) { return a.order() > b.order(); });
    check(d3[0].order() == 64 && d3[1].order() == 32, "Γ2(D3) component orders 64 and 32");
    check(!is_isomorphic(d3[0], d3[1]), "Γ2(D3) components are not isomorphic");
    check(d3[0].order() == 64 && verify_spectrum(d3[0], d3_large_claim()), "Γ2(D3) order-64 component spectrum");
    check(d3[1].order() == 32 && verify_spectrum(d3[1], d3_small_claim()), "Γ2(D3) order-32 component spectrum");
  }
}

void criterion6(Checker& check, const ReproductionOptions& options) {
  std::mt19937_64 rng(options.seed);
  struct Candidate {
    std::string name;
    DesignParams params;
    Design design;
  };
  std::vector<Candidate> candidates;
  for (const auto& item : Workbench::get().items) {
    candidates.push_back({item.entry.id, item.entry.params, item.entry.design});
    for (int r = 0; r < options.design_relabelings; ++r) {
      candidates.push_back({item.entry.id + "~" + std::to_string(r + 1), item.entry.params,
                            random_relabel(item.entry.design, rng)});
    }
  }
  // Certificates once per candidate; is_isomorphic is certificate equality.
  struct Certs {
    std::string design, g1, g2;
  };
  std::vector<Certs> certs;
  for (const auto& c : candidates) {
    Certs out{design_canonical_form(c.design).certificate, canonical_form(gamma1(c.design).graph).certificate, {}};
    if (c.params.biplane()) out.g2 = canonical_form(gamma2(c.design).graph).certificate;
    certs.push_back(std::move(out));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i; j < candidates.size(); ++j) {
      if (candidates[i].params != candidates[j].params) continue;
      const std::string pair = candidates[i].name + " vs " + candidates[j].name;
      const bool designs = design_isomorphic(candidates[i].design, candidates[j].design);
      check(designs == (certs[i].design == certs[j].design), pair + ": design certificate agrees");
      check(designs == (certs[i].g1 == certs[j].g1), pair + ": Γ1 isomorphism agrees with design isomorphism");
      if (candidates[i].params.biplane()) {
        check(designs == (certs[i].g2 == certs[j].g2), pair + ": Γ2 isomorphism agrees with design isomorphism");
      }
      const bool same_source = candidates[i].name.substr(0, candidates[i].name.find('~')) ==
                               candidates[j].name.substr(0, candidates[j].name.find('~'));
      check(designs == same_source, pair + ": expected " + (same_source ? "isomorphic" : "non-isomorphic"));
    }
  }
}

void criterion7(Checker& check) {
  const auto& bench = Workbench::get();
  std::vector<IntPolynomial> polys;
  std::vector<std::string> certs;
  for (const auto& id : kSixteen) {
    polys.push_back(char_poly(bench.at(id).g1.graph));
    certs.push_back(canonical_form(bench.at(id).g1.graph).certificate);
  }
  for (std::size_t i = 0; i < kSixteen.size(); ++i) {
    for (std::size_t j = i + 1; j < kSixteen.size(); ++j) {
      check(polys[i] == polys[j], "Γ1 of " + kSixteen[i] + " and " + kSixteen[j] + " cospectral");
      check(certs[i] != certs[j], "Γ1 of " + kSixteen[i] + " and " + kSixteen[j] + " non-isomorphic");
    }
  }
}

void criterion8(Checker& check, const ReproductionOptions& options) {
  const auto& bench = Workbench::get();
  std::vector<std::pair<std::string, const Graph*>> graphs_under_test;
  std::vector<Graph> owned;
  owned.reserve(64);
  for (const auto& item : bench.items) {
    graphs_under_test.emplace_back(item.entry.id + " incidence", &item.incidence);
    graphs_under_test.emplace_back(item.entry.id + " Γ1", &item.g1.graph);
    if (item.g2) {
      graphs_under_test.emplace_back(item.entry.id + " Γ2", &item.g2->graph);
      auto parts = component_graphs(item.g2->graph);
      for (std::size_t i = 0; i < parts.size(); ++i) {
        owned.push_back(std::move(parts[i]));
        graphs_under_test.emplace_back(item.entry.id + " Γ2 component " + std::to_string(i), &owned.back());
      }
    }
  }
  for (const auto& name : reference_graph_names()) {
    owned.push_back(reference_graph(name));
    graphs_under_test.emplace_back("reference " + name, &owned.back());
  }

  bool saw_extended_header = false;
  for (const auto& [name, g] : graphs_under_test) {
    check(audit_char_poly(*g, char_poly(*g)).passed(), name + ": char-poly coefficient audit");
    const std::string g6 = to_graph6(*g);
    saw_extended_header = saw_extended_header || g6.front() == '~';
    check(from_graph6(g6) == *g, name + ": graph6 round trip");
  }
  check(saw_extended_header, "graph6 round trip exercised the n >= 63 header");

  // Invariance under relabelling, on the catalog's own graphs.
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  for (const auto& [name, g] : graphs_under_test) {
    if (name.find("component") != std::string::npos) continue;
    const std::string reference = canonical_form(*g).certificate;
    int mismatches = 0;
    for (int t = 0; t < options.relabelings_per_graph; ++t) {
      const auto perm = random_permutation(g->order(), rng);
      if (canonical_form(permute(*g, perm)).certificate != reference) ++mismatches;
    }
    check(mismatches == 0, name + ": canonical form invariant under " +
                               std::to_string(options.relabelings_per_graph) + " relabellings (" +
                               std::to_string(mismatches) + " mismatches)");
  }

  for (const auto& item : bench.items) {
    const LineGraph lg = line_graph(item.incidence);
    const auto position = flag_to_line_graph_vertex(item.g1.flags);
    const Graph& g1 = item.g1.graph;
    bool ok = lg.graph.order() == g1.order();
    std::vector<bool> used(static_cast<std::size_t>(g1.order()), false);
    for (int i = 0; ok && i < g1.order(); ++i) {
      const int p = position[i];
      const Flag& f = item.g1.flags[i];
      ok = p >= 0 && p < g1.order() && !used[p] && lg.edges[p] == Edge{f.point, item.entry.params.v + f.block_index};
      if (ok) used[p] = true;
    }
    for (int i = 0; ok && i < g1.order(); ++i)
      for (int j = i + 1; ok && j < g1.order(); ++j)
        ok = g1.adjacent(i, j) == lg.graph.adjacent(position[i], position[j]);
    check(ok, item.entry.id + ": Γ1 equals the line graph of the incidence graph position by position");
  }

  constexpr double tolerance = 1e-9;
  std::vector<std::pair<std::string, std::pair<const Graph*, SpectrumClaim>>> numeric;
  for (const auto& item : bench.items) {
    if (auto it = gamma1_claims().find(item.entry.id); it != gamma1_claims().end())
      numeric.push_back({item.entry.id + " Γ1", {&item.g1.graph, it->second}});
    numeric.push_back({item.entry.id + " incidence", {&item.incidence, formula_spectrum_incidence(item.entry.params)}});
  }
  const Graph clebsch = reference_graph("clebsch");
  numeric.push_back({"reference clebsch", {&clebsch, clebsch_claim()}});
  for (const auto& [name, job] : numeric) {
    const auto clusters = numeric_spectrum(*job.first, tolerance);
    const bool certified = std::all_of(clusters.begin(), clusters.end(), [](const auto& c) { return c.certified; });
    check(certified && numeric_matches_claim(clusters, job.second, tolerance),
          name + ": numeric spectrum matches the exact claim at 1e-9");
  }
}

const std::vector<std::string>& titles() {
  static const std::vector<std::string> t = {
      "exact Γ1 spectra of the biplanes",
      "exact spectra of the complete (6,20,10,3,4) design",
      "Γ1 regularity profiles match prediction",
      "Γ2 regularity profiles match prediction",
      "Γ2 component decompositions",
      "design isomorphism agrees with Γ1 and Γ2 isomorphism",
      "16-point Γ1 graphs cospectral and non-isomorphic",
      "property suites",
  };
  return t;
}

}  // namespace

CriterionResult run_criterion(int number, const ReproductionOptions& options) {
  if (number < 1 || number > 8) throw std::out_of_range("criterion number must be in 1..8");
  CriterionResult result;
  result.number = number;
  result.title = titles()[static_cast<std::size_t>(number - 1)];
  const auto start = std::chrono::steady_clock::now();
  Checker check{result};
  try {
    switch (number) {
      case 1: criterion1(check); break;
      case 2: criterion2(check); break;
      case 3: criterion3(check); break;
      case 4: criterion4(check); break;
      case 5: criterion5(check); break;
      case 6: criterion6(check, options); break;
      case 7: criterion7(check); break;
      case 8: criterion8(check, options); break;
    }
    check.finish();
  } catch (const std::exception& e) {
    result.passed = false;
    result.notes.push_back(std::string("error: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CriterionResult> run_acceptance(const ReproductionOptions& options) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= 8; ++i) out.push_back(run_criterion(i, options));
  return out;
}

Json reproduction_table(const ReproductionOptions& options) {
  const auto& bench = Workbench::get();
  Json designs = Json::array();
  for (const auto& item : bench.items) {
    Json row;
    row["id"] = item.entry.id;
    row["params"] = to_json(item.entry.params);

    Json g1;
    const auto profile = classify(item.g1.graph);
    g1["profile"] = to_json(profile);
    g1["prediction"] = to_json(check_against_prediction(profile, predicted_gamma1_profile(item.entry.params)));
    const IntPolynomial p1 = char_poly(item.g1.graph);
    const SpectrumClaim formula = formula_spectrum_gamma1(item.entry.params);
    g1["formula_spectrum"] = formula.to_string();
    g1["formula_verified"] = verify_spectrum(p1, formula);
    if (auto it = gamma1_claims().find(item.entry.id); it != gamma1_claims().end()) {
      g1["claimed_spectrum"] = it->second.to_string();
      g1["claim_verified"] = verify_spectrum(p1, it->second);
    }
    row["gamma1"] = std::move(g1);

    const SpectrumClaim inc = formula_spectrum_incidence(item.entry.params);
    row["incidence"] = {{"formula_spectrum", inc.to_string()}, {"formula_verified", verify_spectrum(item.incidence, inc)}};

    if (item.g2) {
      Json g2;
      const auto p2 = classify(item.g2->graph);
      g2["profile"] = to_json(p2);
      g2["prediction"] = to_json(check_against_prediction(p2, predicted_gamma2_profile(item.entry.params)));
      Json sizes = Json::array();
      for (const auto& c : connected_components(item.g2->graph)) sizes.push_back(c.size());
      g2["component_sizes"] = std::move(sizes);
      g2["girth"] = girth(item.g2->graph) ? Json(*girth(item.g2->graph)) : Json(nullptr);
      row["gamma2"] = std::move(g2);
    }
    designs.push_back(std::move(row));
  }

  Json iso = Json::object();
  Json cospec = Json::object();
  std::vector<IntPolynomial> polys;
  for (const auto& id : kSixteen) polys.push_back(char_poly(bench.at(id).g1.graph));
  for (std::size_t i = 0; i < kSixteen.size(); ++i) {
    for (std::size_t j = 0; j < kSixteen.size(); ++j) {
      const auto& a = bench.at(kSixteen[i]);
      const auto& b = bench.at(kSixteen[j]);
      iso[kSixteen[i]][kSixteen[j]] = {{"designs", design_isomorphic(a.entry.design, b.entry.design)},
                                       {"gamma1", is_isomorphic(a.g1.graph, b.g1.graph)},
                                       {"gamma2", is_isomorphic(a.g2->graph, b.g2->graph)}};
      cospec[kSixteen[i]][kSixteen[j]] = {{"gamma1", polys[i] == polys[j]},
                                          {"gamma2", cospectral(a.g2->graph, b.g2->graph)}};
    }
  }

  Json criteria = Json::array();
  bool all = true;
  for (const auto& r : run_acceptance(options)) {
    all = all && r.passed;
    criteria.push_back({{"number", r.number},
                        {"title", r.title},
                        {"passed", r.passed},
                        {"notes", r.notes},
                        {"seconds", r.seconds}});
  }
  return {{"designs", std::move(designs)},
          {"isomorphism_16", std::move(iso)},
          {"cospectrality_16", std::move(cospec)},
          {"criteria", std::move(criteria)},
          {"passed", all}};
}

}  // namespace flagspec
