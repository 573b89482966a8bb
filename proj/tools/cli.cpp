#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "flagspec/catalog.hpp"
#include "flagspec/errors.hpp"
#include "flagspec/interchange.hpp"
#include "flagspec/isomorphism.hpp"
#include "flagspec/reproduction.hpp"

namespace flagspec::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

bool consume(std::string_view& text, std::string_view prefix) {
  if (!text.starts_with(prefix)) return false;
  text.remove_prefix(prefix.size());
  return true;
}

/// "catalog:<id>" or a design JSON file.
Design load_design(std::string_view source) {
  if (consume(source, "catalog:")) return get_design(std::string(source));
  return design_from_json(parse_json(read_file(std::string(source))));
}

Graph graph_from_text(const std::string& text) {
  auto first = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return graph_from_json(parse_json(text));
  std::string trimmed(first, text.end());
  while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back()))) trimmed.pop_back();
  return from_graph6(trimmed);
}

/// g6:<graph6> | ref:<name> | gamma1:<design> | gamma2:<design> |
/// incidence:<design> | a JSON or graph6 file.
Graph load_graph(std::string_view source) {
  if (consume(source, "g6:")) return from_graph6(source);
  if (consume(source, "ref:")) return reference_graph(std::string(source));
  if (consume(source, "gamma1:")) return gamma1(load_design(source)).graph;
  if (consume(source, "gamma2:")) return gamma2(load_design(source)).graph;
  if (consume(source, "incidence:")) return incidence_graph(load_design(source));
  if (source.starts_with("catalog:")) {
    throw UsageError("'" + std::string(source) +
                     "' names a design; use gamma1:, gamma2: or incidence: in front of it, or --designs");
  }
  return graph_from_text(read_file(std::string(source)));
}

DesignParams parse_params(const std::string& text) {
  std::vector<int> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--params expects v,b,r,k,lambda as integers, got '" + text + "'");
    }
  }
  if (values.size() != 5) throw UsageError("--params expects five values v,b,r,k,lambda");
  DesignParams p{values[0], values[1], values[2], values[3], values[4]};
  if (p.v <= p.k || p.k <= 1 || p.lambda < 1 || !p.satisfies_identities()) {
    throw NonIntegralParams("parameters " + p.to_string() + " violate r(k-1) = λ(v-1) or bk = vr");
  }
  return p;
}

Json claim_report(const SpectrumClaim& c, std::optional<bool> verified) {
  Json out = to_json(c);
  if (verified) out["verified"] = *verified;
  return out;
}

struct Context {
  std::ostream& out;
  bool pretty = false;

  void emit(const Json& j) const { out << dump_json(j, pretty ? 2 : -1) << '\n'; }
};

Json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flag graphs of block designs: construction, regularity, spectra and isomorphism", "flagspec"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out};
  app.add_flag("--pretty", ctx.pretty, "Indent JSON output");

  std::function<int()> action;
  std::string a, b, format = "json", via, claim_path, params_text, catalog_action, catalog_id;
  bool numeric = false, designs = false;
  double tolerance = 1e-9;
  int relabelings = 100;

  auto* validate = app.add_subcommand("validate", "Validate a design and print its parameters");
  validate->add_option("design", a, "Design JSON file or catalog:<id>")->required();
  validate->callback([&] {
    action = [&] {
      ctx.emit({{"valid", true}, {"params", to_json(validate_design(load_design(a)))}});
      return kSuccess;
    };
  });

  auto* catalog = app.add_subcommand("catalog", "List or show stored designs");
  catalog->add_option("action", catalog_action, "list | show")->check(CLI::IsMember({"list", "show"}));
  catalog->add_option("id", catalog_id, "Catalog id for show");
  catalog->callback([&] {
    action = [&] {
      if (catalog_action == "show") {
        if (catalog_id.empty()) throw UsageError("catalog show needs an id");
        auto e = get_entry(catalog_id);
        Json j = to_json(e.design);
        j["id"] = e.id;
        j["params"] = to_json(e.params);
        j["provenance"] = e.provenance;
        ctx.emit(j);
        return kSuccess;
      }
      if (!catalog_id.empty()) throw UsageError("catalog list takes no id");
      Json list = Json::array();
      for (const auto& e : catalog_entries()) {
        list.push_back({{"id", e.id}, {"params", to_json(e.params)}, {"provenance", e.provenance}});
      }
      ctx.emit({{"designs", std::move(list)}});
      return kSuccess;
    };
  });

  for (const char* name : {"gamma1", "gamma2", "incidence"}) {
    const std::string which = name;
    auto* sub = app.add_subcommand(name, which == "incidence" ? "Incidence graph of a design"
                                                             : "Flag graph " + which + " of a design");
    sub->add_option("design", a, "Design JSON file or catalog:<id>")->required();
    sub->add_option("--format", format, "json | graph6")->check(CLI::IsMember({"json", "graph6"}));
    sub->callback([&, which] {
      action = [&, which] {
        const Design d = load_design(a);
        std::optional<FlagGraph> fg;
        Graph g;
        if (which == "incidence") {
          validate_design(d);
          g = incidence_graph(d);
        } else {
          fg = which == "gamma1" ? gamma1(d) : gamma2(d);
          g = fg->graph;
        }
        if (format == "graph6") {
          out << to_graph6(g) << '\n';
        } else {
          ctx.emit(fg ? to_json(*fg) : to_json(g));
        }
        return kSuccess;
      };
    });
  }

  auto* classify_cmd = app.add_subcommand("classify", "Regularity profile of a graph or of a design's flag graph");
  classify_cmd->add_option("source", a, "Graph source, or a design when --via is given")->required();
  classify_cmd->add_option("--via", via, "Build gamma1 or gamma2 of a design first")
      ->check(CLI::IsMember({"gamma1", "gamma2"}));
  classify_cmd->callback([&] {
    action = [&] {
      if (via.empty()) {
        ctx.emit({{"profile", to_json(classify(load_graph(a)))}});
        return kSuccess;
      }
      const Design d = load_design(a);
      const FlagGraph fg = via == "gamma1" ? gamma1(d) : gamma2(d);
      const auto profile = classify(fg.graph);
      const auto predicted = via == "gamma1" ? predicted_gamma1_profile(fg.source_design_params)
                                             : predicted_gamma2_profile(fg.source_design_params);
      const auto report = check_against_prediction(profile, predicted);
      ctx.emit({{"profile", to_json(profile)},
                {"params", to_json(fg.source_design_params)},
                {"predicted", to_json(predicted)},
                {"comparison", to_json(report)}});
      return report.passed() ? kSuccess : kNegative;
    };
  });

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of the adjacency matrix");
  charpoly->add_option("graph", a, "Graph source")->required();
  charpoly->callback([&] {
    action = [&] {
      const Graph g = load_graph(a);
      const IntPolynomial p = char_poly(g);
      ctx.emit({{"n", g.order()}, {"coefficients", to_json(p)}, {"polynomial", p.to_string()}});
      return kSuccess;
    };
  });

  auto* spectrum = app.add_subcommand("spectrum", "Verify a spectrum claim and/or compute the numeric spectrum");
  spectrum->add_option("graph", a, "Graph source")->required();
  spectrum->add_option("--claim", claim_path, "Claim JSON file");
  spectrum->add_flag("--numeric", numeric, "Report numeric eigenvalue clusters");
  spectrum->add_option("--tolerance", tolerance, "Cluster tolerance for --numeric")->check(CLI::PositiveNumber);
  spectrum->callback([&] {
    action = [&] {
      const Graph g = load_graph(a);
      Json result = Json::object();
      int code = kSuccess;
      std::optional<SpectrumClaim> claim;
      if (!claim_path.empty()) {
        claim = claim_from_json(parse_json(read_file(claim_path)));
        const bool ok = verify_spectrum(g, *claim);
        result["claim"] = claim_report(*claim, ok);
        result["verified"] = ok;
        if (!ok) code = kNegative;
      }
      if (numeric || !claim) {
        const auto clusters = numeric_spectrum(g, tolerance);
        result["numeric"] = to_json(clusters);
        result["tolerance"] = tolerance;
        if (claim) result["numeric_matches_claim"] = numeric_matches_claim(clusters, *claim, tolerance);
      }
      ctx.emit(result);
      return code;
    };
  });

  auto* formula = app.add_subcommand("formula", "Spectrum predicted from design parameters");
  formula->add_option("kind", a, "incidence | gamma1")->required()->check(CLI::IsMember({"incidence", "gamma1"}));
  formula->add_option("--params", params_text, "v,b,r,k,lambda")->required();
  formula->callback([&] {
    action = [&] {
      const DesignParams p = parse_params(params_text);
      const SpectrumClaim c = a == "incidence" ? formula_spectrum_incidence(p) : formula_spectrum_gamma1(p);
      ctx.emit({{"params", to_json(p)}, {"claim", to_json(c)}});
      return kSuccess;
    };
  });

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two graphs or, with --designs, two designs");
  iso->add_option("a", a, "First graph or design")->required();
  iso->add_option("b", b, "Second graph or design")->required();
  iso->add_flag("--designs", designs, "Compare designs (point bijections only)");
  iso->callback([&] {
    action = [&] {
      bool same = false;
      if (designs) {
        const Design d = load_design(a);
        const Design e = load_design(b);
        same = design_isomorphic(d, e);
      } else {
        same = is_isomorphic(load_graph(a), load_graph(b));
      }
      ctx.emit({{"isomorphic", same}});
      return same ? kSuccess : kNegative;
    };
  });

  auto* cospec = app.add_subcommand("cospectral", "Decide whether two graphs share a characteristic polynomial");
  cospec->add_option("a", a, "First graph")->required();
  cospec->add_option("b", b, "Second graph")->required();
  cospec->callback([&] {
    action = [&] {
      const bool same = cospectral(load_graph(a), load_graph(b));
      ctx.emit({{"cospectral", same}});
      return same ? kSuccess : kNegative;
    };
  });

  auto* components = app.add_subcommand("components", "Connected components with their graph6");
  components->add_option("graph", a, "Graph source")->required();
  components->callback([&] {
    action = [&] {
      const Graph g = load_graph(a);
      Json sizes = Json::array();
      Json parts = Json::array();
      for (const auto& c : connected_components(g)) {
        sizes.push_back(c.size());
        parts.push_back({{"vertices", c}, {"graph6", to_graph6(induced_subgraph(g, c))}});
      }
      ctx.emit({{"sizes", std::move(sizes)}, {"components", std::move(parts)}});
      return kSuccess;
    };
  });

  auto* report = app.add_subcommand("report", "Reproduction report");
  report->add_option("name", a, "paper-table5")->required()->check(CLI::IsMember({"paper-table5"}));
  report->add_option("--relabelings", relabelings, "Random relabellings per graph in the invariance suite")
      ->check(CLI::Range(1, 100000));
  report->callback([&] {
    action = [&] {
      ReproductionOptions options;
      options.relabelings_per_graph = relabelings;
      const Json table = reproduction_table(options);
      ctx.emit(table);
      return table.at("passed").get<bool>() ? kSuccess : kNegative;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    ctx.emit(error_json("UsageError", e.what()));
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << '\n';
    ctx.emit(error_json(e.kind(), e.what()));
    return kFile;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    ctx.emit(error_json(e.kind(), e.what()));
    return kValidation;
  }
}

}  // namespace flagspec::cli
