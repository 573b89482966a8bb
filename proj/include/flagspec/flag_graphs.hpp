#pragma once

#include <string>
#include <vector>

#include "flagspec/design.hpp"
#include "flagspec/graph.hpp"

namespace flagspec {

enum class FlagGraphVariant { Gamma1, Gamma2 };

std::string to_string(FlagGraphVariant variant);

/// A graph on the flags of a design; vertex i is flags[i].
struct FlagGraph {
  Graph graph;
  std::vector<Flag> flags;
  DesignParams source_design_params;
  FlagGraphVariant variant = FlagGraphVariant::Gamma1;
};

/// Flags adjacent iff they share the point or share the block instance.
FlagGraph gamma1(const Design& d);

/// Biplanes only: (p,c) ~ (q,d) iff c ∩ d = {p, q}. Throws NotABiplane for
/// lambda != 2, non-symmetric designs, or repeated blocks.
FlagGraph gamma2(const Design& d);

/// Position of each flag's edge {p, v + j} in the lexicographic edge list of
/// incidence_graph(d), i.e. its vertex index in line_graph(incidence_graph(d)).
std::vector<int> flag_to_line_graph_vertex(const std::vector<Flag>& flags);

}  // namespace flagspec
