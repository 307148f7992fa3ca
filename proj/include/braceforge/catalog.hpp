#ifndef BRACEFORGE_CATALOG_HPP
#define BRACEFORGE_CATALOG_HPP

#include "braceforge/group.hpp"

namespace braceforge {

/// Named group table, unique names, ordered by (order, name).
struct Catalog {
  std::vector<std::pair<std::string, GroupPtr>> entries;

  GroupPtr find(const std::string& name) const;
  std::vector<std::string> names() const;
};

/// Built-in catalog: cyclic 1..12, dihedral 3..6, symmetric 3..4,
/// quaternion, C2xC2, C2xC4, A4, and direct products of members of
/// order at most 12.
const Catalog& builtin_catalog();

/// Catalog from a JSON file {"groups": [group, ...]}; every table is
/// re-validated on load.
Catalog load_catalog_file(const std::string& path);

/// The built-in catalog, unless BRACE_FORGE_CATALOG names a JSON file.
Catalog active_catalog();

}  // namespace braceforge

#endif  // BRACEFORGE_CATALOG_HPP
