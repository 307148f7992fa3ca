#include "braceforge/catalog.hpp"

#include <algorithm>
#include <cstdlib>

#include "braceforge/json_io.hpp"

namespace braceforge {

GroupPtr Catalog::find(const std::string& name) const {
  for (const auto& [n, g] : entries)
    if (n == name) return g;
  return nullptr;
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> out;
  for (const auto& [n, g] : entries) out.push_back(n);
  return out;
}

const Catalog& builtin_catalog() {
  static const Catalog cat = [] {
    Catalog c;
    std::vector<std::pair<std::string, GroupPtr>> base;
    for (int m = 1; m <= 12; ++m) base.emplace_back("C" + std::to_string(m), cyclic_group(m));
    for (int m = 3; m <= 6; ++m) base.emplace_back("D" + std::to_string(m), dihedral_group(m));
    base.emplace_back("S3", symmetric3_presented());
    base.emplace_back("S4", symmetric_group(4));
    base.emplace_back("Q8", quaternion_group());
    base.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
    base.emplace_back("C2xC4", direct_product(cyclic_group(2), cyclic_group(4)));
    base.emplace_back("A4", alternating_group(4));
    c.entries = base;
    // direct products of members, capped at order 12; factors ordered by
    // (order, name) so composite names are deterministic
    auto has = [&](const std::string& n) {
      return std::any_of(c.entries.begin(), c.entries.end(),
                         [&](const auto& e) { return e.first == n; });
    };
    for (size_t i = 0; i < base.size(); ++i)
      for (size_t j = 0; j < base.size(); ++j) {
        const auto& [na, ga] = base[i];
        const auto& [nb, gb] = base[j];
        if (ga->n < 2 || gb->n < 2) continue;
        if (std::make_tuple(ga->n, na) > std::make_tuple(gb->n, nb)) continue;
        if (ga->n * gb->n > 12) continue;
        std::string name = na + "x" + nb;
        if (has(name)) continue;
        c.entries.emplace_back(name, direct_product(ga, gb));
      }
    std::sort(c.entries.begin(), c.entries.end(), [](const auto& a, const auto& b) {
      if (a.second->n != b.second->n) return a.second->n < b.second->n;
      return a.first < b.first;
    });
    return c;
  }();
  return cat;
}

Catalog load_catalog_file(const std::string& path) {
  Json j = load_json_file(path);
  if (!j.contains("groups") || !j["groups"].is_array())
    throw invalid_input("catalog file: expected {\"groups\": [...]}");
  Catalog c;
  for (const Json& gj : j["groups"]) {
    GroupPtr g = group_from_json(gj);
    if (c.find(g->name)) throw invalid_input("catalog file: duplicate name " + g->name);
    c.entries.emplace_back(g->name, g);
  }
  return c;
}

Catalog active_catalog() {
  const char* env = std::getenv("BRACE_FORGE_CATALOG");
  if (env != nullptr && *env != '\0') return load_catalog_file(env);
  return builtin_catalog();
}

}  // namespace braceforge
