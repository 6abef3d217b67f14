#pragma once

#include <map>

#include "xprod/crossed.hpp"

namespace xprod {

// Bundled example systems the verifier runs over. Expected verdicts are
// frozen here and asserted by the test suite; tags gate filtered runs.
struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::string> tags;
  CrossedSystem system;
  std::map<std::string, std::string> expected;  // check id → verdict name, plus dimension facts
};

const std::vector<CatalogEntry>& bundled_catalog();
const CatalogEntry* find_entry(const std::string& name);

}  // namespace xprod
