#ifndef BRACEFORGE_JSON_IO_HPP
#define BRACEFORGE_JSON_IO_HPP

#include <json.hpp>

#include "braceforge/catalog.hpp"
#include "braceforge/multibrace.hpp"
#include "braceforge/rb_matrix.hpp"
#include "braceforge/skew_brace.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

using Json = nlohmann::ordered_json;

// {"name": str, "order": n, "table": [[int]], "labels": [str]}
Json group_to_json(const FiniteGroup& G);
GroupPtr group_from_json(const Json& j);  // re-validates

// {"n": int, "r": [[int]]}
Json matrix_to_json(const RbMatrix& m);
RbMatrix matrix_from_json(const Json& j);

// {"group": name-or-content-hash, "weight": 1|-1, "images": [int]}
Json operator_to_json(const RbOperator& B);
/// Resolves the group by explicit argument, catalog name, or content hash.
RbOperator operator_from_json(const Json& j, const Catalog& catalog,
                              GroupPtr group_override = nullptr);

// {"order": n, "add": [[int]], "circ": [[int]], "labels": [str]}
Json brace_to_json(const SkewBrace& A);
SkewBrace brace_from_json(const Json& j);  // re-validates both tables and the axiom

// {"order": n, "pairs": [[[s,t]]]} with pairs[x][y] = [sigma_x(y), tau_y(x)]
Json solution_to_json(const YbeSolution& S);
YbeSolution solution_from_json(const Json& j);

// {"order": n, "table": [[int]]}
Json rack_to_json(const Rack& R);
Rack rack_from_json(const Json& j);

// {"order": n, "tables": [[[int]]]}
Json multibrace_to_json(const MultiBrace& M);
MultiBrace multibrace_from_json(const Json& j);

Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace braceforge

#endif  // BRACEFORGE_JSON_IO_HPP
