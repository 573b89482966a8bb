#include "flagspec/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include "flagspec/errors.hpp"
#include "flagspec/flag_graphs.hpp"
#include "flagspec/interchange.hpp"

namespace flagspec {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& embedded_catalog();
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = {
      "biplane-4-3-2",     "biplane-7-4-2",     "biplane-11-5-2",    "biplane-16-6-2-D1",
      "biplane-16-6-2-D2", "biplane-16-6-2-D3", "fano-7-3-1",        "complete-6-20-10-3-4"};
  return ids;
}

namespace {

std::string catalog_text(const std::string& id) {
  if (const char* dir = std::getenv("FLAGSPEC_CATALOG_DIR"); dir != nullptr && *dir != '\0') {
    std::filesystem::path file = std::filesystem::path(dir) / (id + ".json");
    std::ifstream in(file);
    if (!in) throw FileError("cannot read catalog file " + file.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  for (const auto& [name, text] : detail::embedded_catalog()) {
    if (name == id) return std::string(text);
  }
  throw UnknownCatalogId(id);
}

}  // namespace

CatalogEntry get_entry(const std::string& id) {
  const auto& ids = catalog_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw UnknownCatalogId(id);
  CatalogRecord record = catalog_record_from_json(catalog_text(id));
  DesignParams params = validate_design(record.design);
  if (record.params && *record.params != params) {
    throw ValidationError("CatalogMismatch", "catalog entry " + id + " declares " +
                                                 record.params->to_string() + " but validates as " +
                                                 params.to_string());
  }
  return {id, params, std::move(record.design), std::move(record.provenance)};
}

Design get_design(const std::string& id) { return get_entry(id).design; }

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  for (const auto& id : catalog_ids()) out.push_back(get_entry(id));
  return out;
}

std::vector<CatalogConstruction> catalog_constructions() {
  const auto z = [](int n) { return FiniteGroup::cyclic(n); };
  const auto product = [](const FiniteGroup& a, const FiniteGroup& b) { return FiniteGroup::direct_product(a, b); };
  const std::vector<int> d1{0, 1, 2, 4, 9, 14};   // (0,0),(0,1),(0,2),(1,0),(2,1),(3,2)
  const std::vector<int> d2{0, 1, 2, 4, 11, 12};  // (0,0),(0,1),(1,0),(2,0),(5,1),(6,0)
  const std::vector<int> d3{0, 1, 2, 4, 6, 9};    // (1,0),(1,1),(i,0),(j,0),(k,0),(-1,1)
  const std::vector<int> biplane7{0, 3, 5, 6};
  const std::vector<int> biplane11{1, 3, 4, 5, 9};
  const std::vector<int> fano{1, 2, 4};
  return {
      {"biplane-4-3-2", "all 3-subsets of a 4-set", complete_design(4, 3)},
      {"biplane-7-4-2", "difference set {0,3,5,6} in Z7 (complements of Fano lines)",
       develop_difference_set(z(7), biplane7)},
      {"biplane-11-5-2", "difference set {1,3,4,5,9} in Z11 (quadratic residues)",
       develop_difference_set(z(11), biplane11)},
      {"biplane-16-6-2-D1",
       "difference set {(0,0),(0,1),(0,2),(1,0),(2,1),(3,2)} in Z4xZ4, element (a,b) labelled 4a+b",
       develop_difference_set(product(z(4), z(4)), d1)},
      {"biplane-16-6-2-D2",
       "difference set {(0,0),(0,1),(1,0),(2,0),(5,1),(6,0)} in Z8xZ2, element (a,b) labelled 2a+b",
       develop_difference_set(product(z(8), z(2)), d2)},
      {"biplane-16-6-2-D3",
       "difference set {(1,0),(1,1),(i,0),(j,0),(k,0),(-1,1)} in Q8xZ2, Q8 ordered 1,i,j,k,-1,-i,-j,-k, "
       "element (q,b) labelled 2q+b, blocks are right translates",
       develop_difference_set(product(FiniteGroup::quaternion(), z(2)), d3)},
      {"fano-7-3-1", "difference set {1,2,4} in Z7", develop_difference_set(z(7), fano)},
      {"complete-6-20-10-3-4", "all 3-subsets of a 6-set", complete_design(6, 3)},
  };
}

namespace {

Graph clebsch() {
  // binary 4-vectors, adjacent when they differ by a unit vector or by 1111
  std::vector<Edge> edges;
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      int diff = a ^ b;
      if (std::popcount(static_cast<unsigned>(diff)) == 1 || diff == 15) edges.push_back({a, b});
    }
  }
  return Graph(16, std::move(edges));
}

}  // namespace

const std::vector<std::string>& reference_graph_names() {
  static const std::vector<std::string> names = {"clebsch", "coxeter", "cycle-4"};
  return names;
}

Graph reference_graph(const std::string& name) {
  if (name == "clebsch") return clebsch();
  if (name == "coxeter") return gamma2(get_design("biplane-7-4-2")).graph;
  if (name == "cycle-4") return graphs::cycle(4);
  throw UnknownGraphName(name);
}

}  // namespace flagspec
