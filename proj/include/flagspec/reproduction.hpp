#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagspec/interchange.hpp"

namespace flagspec {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::vector<std::string> notes;  ///< one line per individual check that failed, or a summary
  double seconds = 0.0;
};

struct ReproductionOptions {
  int relabelings_per_graph = 100;  ///< canonical-form invariance trials
  int design_relabelings = 2;       ///< random relabelled copies per design in the isomorphism check
  std::uint64_t seed = 0x5eed;
};

/// Runs one acceptance criterion (1..8). Throws std::out_of_range otherwise.
CriterionResult run_criterion(int number, const ReproductionOptions& options = {});
std::vector<CriterionResult> run_acceptance(const ReproductionOptions& options = {});

/// Full reproduction table: per-design spectra and profiles, the isomorphism
/// and cospectrality matrices of the 16-point biplanes, and the criteria.
Json reproduction_table(const ReproductionOptions& options = {});

}  // namespace flagspec
