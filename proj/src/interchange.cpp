#include "flagspec/interchange.hpp"

#include <algorithm>
#include <climits>

#include "flagspec/errors.hpp"

namespace flagspec {

namespace {

// Wide integers are carried through the Json tree as strings with this
// prefix so that dump_json can unquote them.
constexpr std::string_view kWideMarker = "\x01int:";

class WideIntegerDomParser : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using Base = nlohmann::detail::json_sax_dom_parser<Json>;
  using Base::Base;

  bool number_float(Json::number_float_t value, const std::string& lexeme) {
    if (is_integer_lexeme(lexeme)) {
      std::string copy = lexeme;
      return Base::string(copy);
    }
    return Base::number_float(value, lexeme);
  }

 private:
  static bool is_integer_lexeme(const std::string& s) {
    return !s.empty() && s.find_first_of(".eE") == std::string::npos;
  }
};

template <typename T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

std::vector<int> int_set_from_json(const Json& j, const char* key) { return get_field<std::vector<int>>(j, key); }

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.starts_with(kWideMarker)) s.erase(0, kWideMarker.size());
    Integer out;
    if (s.empty() || out.set_str(s, 10) != 0) throw ParseError("not an integer: \"" + s + "\"");
    return out;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) {
    Rational out;
    if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not a rational: " + j.dump());
    out.canonicalize();
    return out;
  }
  throw ParseError("expected a rational, got " + j.dump());
}

}  // namespace

Json parse_json(std::string_view text) {
  Json out;
  WideIntegerDomParser sax(out, true);
  try {
    if (!Json::sax_parse(text, &sax)) throw ParseError("invalid JSON");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return out;
}

Json to_json(const DesignParams& p) {
  return {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"lambda", p.lambda}};
}

DesignParams params_from_json(const Json& j) {
  return {get_field<int>(j, "v"), get_field<int>(j, "b"), get_field<int>(j, "r"), get_field<int>(j, "k"),
          get_field<int>(j, "lambda")};
}

Json to_json(const Design& d) {
  return {{"v", d.points()}, {"blocks", d.blocks()}, {"allow_repeated_blocks", d.allow_repeated_blocks()}};
}

Design design_from_json(const Json& j) {
  const int v = get_field<int>(j, "v");
  auto blocks = get_field<std::vector<std::vector<int>>>(j, "blocks");
  bool allow = j.contains("allow_repeated_blocks") ? get_field<bool>(j, "allow_repeated_blocks") : false;
  return Design(v, std::move(blocks), allow);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  const int n = get_field<int>(j, "n");
  if (n < 0) throw InvalidGraph("negative order");
  auto pairs = get_field<std::vector<std::pair<int, int>>>(j, "edges");
  return Graph::from_pairs(n, pairs);
}

Json to_json(const FlagGraph& fg) {
  Json out = to_json(fg.graph);
  Json flags = Json::array();
  for (const auto& f : fg.flags) flags.push_back({f.point, f.block_index});
  out["flags"] = std::move(flags);
  out["variant"] = to_string(fg.variant);
  out["params"] = to_json(fg.source_design_params);
  return out;
}

FlagGraph flag_graph_from_json(const Json& j) {
  FlagGraph out;
  out.graph = graph_from_json(j);
  for (const auto& [p, b] : get_field<std::vector<std::pair<int, int>>>(j, "flags")) out.flags.push_back({p, b});
  if (static_cast<int>(out.flags.size()) != out.graph.order()) throw ParseError("flag count differs from n");
  const auto variant = get_field<std::string>(j, "variant");
  if (variant == "gamma1") {
    out.variant = FlagGraphVariant::Gamma1;
  } else if (variant == "gamma2") {
    out.variant = FlagGraphVariant::Gamma2;
  } else {
    throw ParseError("unknown variant \"" + variant + "\"");
  }
  out.source_design_params = params_from_json(get_field<Json>(j, "params"));
  return out;
}

Json to_json(const RegularityProfile& p) {
  return {{"n", p.n},
          {"degrees", p.degrees},
          {"eta_set", p.eta_set},
          {"mu_set", p.mu_set},
          {"classification", to_string(p.classification)}};
}

RegularityProfile profile_from_json(const Json& j) {
  RegularityProfile p;
  p.n = get_field<int>(j, "n");
  for (int x : int_set_from_json(j, "degrees")) p.degrees.insert(x);
  for (int x : int_set_from_json(j, "eta_set")) p.eta_set.insert(x);
  for (int x : int_set_from_json(j, "mu_set")) p.mu_set.insert(x);
  const auto name = get_field<std::string>(j, "classification");
  bool found = false;
  for (auto c : {Classification::SRG, Classification::QSRG, Classification::AQSRG, Classification::NotRegular,
                 Classification::Complete, Classification::Edgeless}) {
    if (to_string(c) == name) {
      p.classification = c;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown classification \"" + name + "\"");
  return p;
}

Json to_json(const PredictedProfile& p) {
  return {{"variant", to_string(p.variant)}, {"n", p.n},           {"degree", p.degree},
          {"eta_set", p.eta_set},            {"mu_superset", p.mu_superset}};
}

Json to_json(const PredictionReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"field", c.field}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.passed()}, {"checks", std::move(checks)}};
}

Json to_json(const SpectrumClaim& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries()) {
    entries.push_back({{"value", e.value.to_string()}, {"multiplicity", e.multiplicity}});
  }
  return {{"entries", std::move(entries)}, {"text", c.to_string()}};
}

SpectrumClaim claim_from_json(const Json& j) {
  SpectrumClaim out;
  for (const auto& e : get_field<Json>(j, "entries")) {
    const int m = get_field<int>(e, "multiplicity");
    if (m <= 0) throw InvalidClaim("multiplicities must be positive");
    if (e.contains("value")) {
      const auto& value = e.at("value");
      if (value.is_string()) {
        out.add(AlgebraicEigenvalue::parse(value.get<std::string>()), m);
      } else {
        out.add(AlgebraicEigenvalue(rational_from_json(value)), m);
      }
    } else {
      Rational a = rational_from_json(get_field<Json>(e, "a"));
      Rational b = e.contains("b") ? rational_from_json(e.at("b")) : Rational(0);
      Integer d = e.contains("d") ? integer_from_json(e.at("d")) : Integer(0);
      out.add(AlgebraicEigenvalue(a, b, d), m);
    }
  }
  return out;
}

Json to_json(const std::vector<EigenCluster>& clusters) {
  Json out = Json::array();
  for (const auto& c : clusters) {
    out.push_back({{"value", c.value}, {"multiplicity", c.multiplicity}, {"certified", c.certified}});
  }
  return out;
}

Json to_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      out.push_back(static_cast<std::int64_t>(c.get_si()));
    } else {
      out.push_back(std::string(kWideMarker) + c.get_str());
    }
  }
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  const Json& array = j.is_object() ? get_field<Json>(j, "coefficients") : j;
  if (!array.is_array()) throw ParseError("polynomial coefficients must be an array");
  std::vector<Integer> coefficients;
  for (const auto& c : array) coefficients.push_back(integer_from_json(c));
  return IntPolynomial(std::move(coefficients));
}

std::string dump_json(const Json& j, int indent) {
  std::string text = j.dump(indent);
  // "\u0001int:<digits>" -> <digits>
  const std::string quoted = "\"\\u0001int:";
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (true) {
    std::size_t hit = text.find(quoted, pos);
    if (hit == std::string::npos) break;
    out.append(text, pos, hit - pos);
    std::size_t end = text.find('"', hit + quoted.size());
    out.append(text, hit + quoted.size(), end - hit - quoted.size());
    pos = end + 1;
  }
  out.append(text, pos, std::string::npos);
  return out;
}

CatalogRecord catalog_record_from_json(std::string_view text) {
  Json j = parse_json(text);
  CatalogRecord out{j.value("id", std::string{}), design_from_json(j), std::nullopt, j.value("provenance", std::string{})};
  if (j.contains("params")) out.params = params_from_json(j.at("params"));
  return out;
}

std::string catalog_record_to_json(const std::string& id, const Design& d, const DesignParams& params,
                                   const std::string& provenance) {
  // Blocks one per line keeps the frozen files diffable.
  std::string out = "{\n";
  out += "  \"id\": " + Json(id).dump() + ",\n";
  out += "  \"provenance\": " + Json(provenance).dump() + ",\n";
  out += "  \"params\": " + to_json(params).dump() + ",\n";
  out += "  \"v\": " + std::to_string(d.points()) + ",\n";
  out += "  \"allow_repeated_blocks\": " + std::string(d.allow_repeated_blocks() ? "true" : "false") + ",\n";
  out += "  \"blocks\": [\n";
  for (int i = 0; i < d.block_count(); ++i) {
    out += "    " + Json(d.block(i)).dump() + (i + 1 < d.block_count() ? ",\n" : "\n");
  }
  out += "  ]\n}\n";
  return out;
}

}  // namespace flagspec
