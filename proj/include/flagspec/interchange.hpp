#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flagspec/design.hpp"
#include "flagspec/flag_graphs.hpp"
#include "flagspec/graph.hpp"
#include "flagspec/polynomial.hpp"
#include "flagspec/regularity.hpp"
#include "flagspec/spectra.hpp"

namespace flagspec {

using Json = nlohmann::json;

/// Parses JSON text, keeping integers too wide for 64 bits as their decimal
/// strings instead of rounding them to doubles. Throws ParseError.
Json parse_json(std::string_view text);

Json to_json(const DesignParams& p);
DesignParams params_from_json(const Json& j);

/// {"v", "blocks", "allow_repeated_blocks"}; parsing sorts the blocks but
/// does not validate the design.
Json to_json(const Design& d);
Design design_from_json(const Json& j);

/// {"n", "edges"}.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// Graph fields plus "flags" ([point, block] per vertex), "variant", "params".
Json to_json(const FlagGraph& fg);
FlagGraph flag_graph_from_json(const Json& j);

Json to_json(const RegularityProfile& p);
RegularityProfile profile_from_json(const Json& j);
Json to_json(const PredictedProfile& p);
Json to_json(const PredictionReport& r);

/// {"entries": [{"value": "a+b√d", "multiplicity": m}, ...], "text": ...}.
/// Entries may also be given as {"a": "p/q", "b": "p/q", "d": int}.
Json to_json(const SpectrumClaim& c);
SpectrumClaim claim_from_json(const Json& j);

Json to_json(const std::vector<EigenCluster>& clusters);

/// Ascending integer coefficients. Values outside 64 bits become decimal
/// strings in the Json tree; dump_json writes them back as bare integers.
Json to_json(const IntPolynomial& p);
/// Accepts the array itself or an object holding it under "coefficients".
IntPolynomial polynomial_from_json(const Json& j);

/// Serialises, emitting wide polynomial coefficients as JSON integers.
std::string dump_json(const Json& j, int indent = -1);

/// Stored catalog file: design fields plus "id", "params", "provenance".
struct CatalogRecord {
  std::string id;
  Design design;
  std::optional<DesignParams> params;
  std::string provenance;
};
CatalogRecord catalog_record_from_json(std::string_view text);
std::string catalog_record_to_json(const std::string& id, const Design& d, const DesignParams& params,
                                   const std::string& provenance);

}  // namespace flagspec
