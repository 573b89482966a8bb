#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "flagspec/design.hpp"
#include "flagspec/graph.hpp"

namespace flagspec {

/// Relabelling-invariant representative of a (vertex-coloured) graph.
struct CanonicalForm {
  /// Canonical graph6, prefixed by the colour-class signature when the graph
  /// was coloured. Byte equality decides isomorphism.
  std::string certificate;
  /// permutation[v] is the canonical label of input vertex v.
  std::vector<Vertex> permutation;
};

/// Search statistics, for the performance tests.
struct CanonicalStats {
  std::size_t nodes = 0;
  std::size_t leaves = 0;
  std::size_t automorphisms = 0;
};

/// Individualisation-refinement with automorphism pruning. The refined
/// partition's first largest cell is the branching target.
CanonicalForm canonical_form(const Graph& g, CanonicalStats* stats = nullptr);

/// Coloured variant: colours[v] is any integer; the initial ordered partition
/// lists colour classes by increasing colour, so relabellings never mix
/// classes.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours,
                             CanonicalStats* stats = nullptr);

/// The graph with vertex v relabelled as form.permutation[v]; its graph6
/// equals the certificate's graph part.
Graph canonical_graph(const Graph& g, const CanonicalForm& form);

bool is_isomorphic(const Graph& g, const Graph& h);

/// True iff some point bijection maps the block multiset of `d` onto that of
/// `e`. Point/block exchanges (dualities) do not count.
bool design_isomorphic(const Design& d, const Design& e);

/// Canonical form of the point/block-coloured incidence graph.
CanonicalForm design_canonical_form(const Design& d);

}  // namespace flagspec
