#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gbs/json_util.hpp"

namespace gbs::cli {

// A worked example: `check` returns an empty string on success and a
// description of the mismatch otherwise.
struct CatalogEntry {
  std::string id;
  std::string description;
  std::function<std::string()> check;
};

struct CatalogResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

const std::vector<CatalogEntry>& catalog_entries();
// Runs the entries whose id starts with `only` (all if empty), concurrently.
std::vector<CatalogResult> run_catalog(const std::string& only);
Json catalog_to_json(const std::vector<CatalogResult>& results);

}  // namespace gbs::cli
