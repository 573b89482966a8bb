#pragma once

#include <set>
#include <string>
#include <vector>

#include "flagspec/design.hpp"
#include "flagspec/flag_graphs.hpp"
#include "flagspec/graph.hpp"

namespace flagspec {

enum class Classification { SRG, QSRG, AQSRG, NotRegular, Complete, Edgeless };

std::string to_string(Classification c);

/// Exhaustive pair audit of a graph.
struct RegularityProfile {
  int n = 0;
  std::set<int> degrees;
  std::set<int> eta_set;  ///< common-neighbour counts over adjacent pairs
  std::set<int> mu_set;   ///< ... over non-adjacent distinct pairs
  Classification classification = Classification::NotRegular;

  friend bool operator==(const RegularityProfile&, const RegularityProfile&) = default;
};

RegularityProfile classify(const Graph& g);

/// Theorem-derived expectation for a flag graph of a design.
struct PredictedProfile {
  FlagGraphVariant variant = FlagGraphVariant::Gamma1;
  int n = 0;
  int degree = 0;
  std::set<int> eta_set;
  std::set<int> mu_superset;
};

PredictedProfile predicted_gamma1_profile(const DesignParams& p);
/// Throws NotABiplane unless symmetric with lambda = 2.
PredictedProfile predicted_gamma2_profile(const DesignParams& p);

struct FieldCheck {
  std::string field;
  bool passed = false;
  std::string detail;
};

struct PredictionReport {
  std::vector<FieldCheck> checks;
  bool passed() const;
};

/// n, degree and eta must match exactly; mu must sit inside the superset and
/// contain 0. Gamma1 additionally needs mu to equal the superset; Gamma2
/// needs mu to meet {1, 2}.
PredictionReport check_against_prediction(const RegularityProfile& actual,
                                          const PredictedProfile& predicted);

}  // namespace flagspec
