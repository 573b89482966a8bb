#include "flagspec/regularity.hpp"

#include <algorithm>
#include <sstream>

#include "flagspec/errors.hpp"

namespace flagspec {

namespace {

std::string set_string(const std::set<int>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int x : s) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace

std::string to_string(Classification c) {
  switch (c) {
    case Classification::SRG: return "SRG";
    case Classification::QSRG: return "QSRG";
    case Classification::AQSRG: return "AQSRG";
    case Classification::NotRegular: return "NotRegular";
    case Classification::Complete: return "Complete";
    case Classification::Edgeless: return "Edgeless";
  }
  return "?";
}

RegularityProfile classify(const Graph& g) {
  RegularityProfile prof;
  prof.n = g.order();
  prof.degrees = degree_profile(g);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      int common = g.count_common(u, v);
      (g.adjacent(u, v) ? prof.eta_set : prof.mu_set).insert(common);
    }
  }
  if (prof.degrees.size() != 1) {
    prof.classification = Classification::NotRegular;
  } else if (prof.eta_set.empty()) {
    prof.classification = Classification::Edgeless;
  } else if (prof.mu_set.empty()) {
    prof.classification = Classification::Complete;
  } else if (prof.eta_set.size() == 1 && prof.mu_set.size() == 1) {
    prof.classification = Classification::SRG;
  } else if (prof.eta_set.size() == 1) {
    prof.classification = Classification::QSRG;
  } else {
    prof.classification = Classification::AQSRG;
  }
  return prof;
}

PredictedProfile predicted_gamma1_profile(const DesignParams& p) {
  PredictedProfile out;
  out.variant = FlagGraphVariant::Gamma1;
  out.n = p.v * p.r;
  out.degree = p.k + p.r - 2;
  out.eta_set = {p.r - 2, p.k - 2};
  out.mu_superset = p.lambda == 1 ? std::set<int>{0, 1} : std::set<int>{0, 1, 2};
  return out;
}

PredictedProfile predicted_gamma2_profile(const DesignParams& p) {
  if (!p.biplane()) throw NotABiplane("parameters " + p.to_string() + " are not those of a biplane");
  PredictedProfile out;
  out.variant = FlagGraphVariant::Gamma2;
  out.n = p.v * p.k;
  out.degree = p.k - 1;
  out.eta_set = {0};
  out.mu_superset = {0, 1, 2};
  return out;
}

bool PredictionReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const FieldCheck& c) { return c.passed; });
}

PredictionReport check_against_prediction(const RegularityProfile& actual,
                                          const PredictedProfile& predicted) {
  PredictionReport rep;
  auto add = [&](std::string field, bool ok, std::string detail) {
    rep.checks.push_back({std::move(field), ok, std::move(detail)});
  };
  add("n", actual.n == predicted.n,
      std::to_string(actual.n) + " vs " + std::to_string(predicted.n));
  add("degree", actual.degrees == std::set<int>{predicted.degree},
      set_string(actual.degrees) + " vs {" + std::to_string(predicted.degree) + "}");
  add("eta_set", actual.eta_set == predicted.eta_set,
      set_string(actual.eta_set) + " vs " + set_string(predicted.eta_set));
  bool subset = std::includes(predicted.mu_superset.begin(), predicted.mu_superset.end(),
                              actual.mu_set.begin(), actual.mu_set.end());
  add("mu_subset", subset, set_string(actual.mu_set) + " within " + set_string(predicted.mu_superset));
  add("mu_has_zero", actual.mu_set.contains(0), set_string(actual.mu_set));
  if (predicted.variant == FlagGraphVariant::Gamma1) {
    add("mu_exact", actual.mu_set == predicted.mu_superset,
        set_string(actual.mu_set) + " vs " + set_string(predicted.mu_superset));
  } else {
    add("mu_meets_1_2", actual.mu_set.contains(1) || actual.mu_set.contains(2),
        set_string(actual.mu_set));
  }
  return rep;
}

}  // namespace flagspec
