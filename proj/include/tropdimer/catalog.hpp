#pragma once

#include "tropdimer/dimer.hpp"

#include <string>
#include <vector>

namespace tropdimer {

const std::vector<std::string>& catalog_names();
// Canonical dimer for a catalog name; throws DomainError for unknown names.
DualDimer catalog_dimer(const std::string& name);

DualDimer honeycomb_dimer();
DualDimer pants_dimer();

}  // namespace tropdimer
