#pragma once

#include <string>
#include <vector>

#include "flagspec/design.hpp"
#include "flagspec/graph.hpp"

namespace flagspec {

struct CatalogEntry {
  std::string id;
  DesignParams params;
  Design design;
  std::string provenance;
};

/// Ids of the stored designs, in listing order.
const std::vector<std::string>& catalog_ids();

/// Loads and re-validates a stored design. Reads <dir>/<id>.json when the
/// FLAGSPEC_CATALOG_DIR environment variable is set, the embedded copy
/// otherwise. Throws UnknownCatalogId.
CatalogEntry get_entry(const std::string& id);
Design get_design(const std::string& id);
std::vector<CatalogEntry> catalog_entries();

/// How each stored design was generated; rebuilding from these must
/// reproduce the stored block lists exactly.
struct CatalogConstruction {
  std::string id;
  std::string provenance;
  Design design;
};
std::vector<CatalogConstruction> catalog_constructions();

/// "clebsch", "coxeter" (the Γ2 graph of the (7,4,2) biplane) or "cycle-4".
/// Throws UnknownGraphName.
Graph reference_graph(const std::string& name);
const std::vector<std::string>& reference_graph_names();

}  // namespace flagspec
