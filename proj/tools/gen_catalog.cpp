// Regenerates data/catalog/*.json from the difference-set constructions.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "flagspec/catalog.hpp"
#include "flagspec/interchange.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_catalog <output-dir>\n";
    return 3;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  for (const auto& c : flagspec::catalog_constructions()) {
    const auto params = flagspec::validate_design(c.design);
    std::ofstream(dir / (c.id + ".json")) << flagspec::catalog_record_to_json(c.id, c.design, params, c.provenance);
    std::cout << c.id << ' ' << params.to_string() << '\n';
  }
  return 0;
}
