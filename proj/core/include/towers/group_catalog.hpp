#ifndef TOWERS_GROUP_CATALOG_HPP
#define TOWERS_GROUP_CATALOG_HPP

#include <string>
#include <vector>

#include "towers/finite_group.hpp"

namespace towers {

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

/// Named constructions used by the CLI and the test suites.
FiniteGroup catalog_group(const std::string &name);

/// Every centreless group of order at most 24, one per isomorphism type:
/// 1, sym3, dihedral5, alt4, dihedral7, dihedral9, elemdihedral9, frob20,
/// frob21, dihedral11, sym4.
std::vector<CatalogEntry> centreless_catalog();

/// All named groups the catalog can construct.
std::vector<std::string> catalog_names();

} // namespace towers

#endif
