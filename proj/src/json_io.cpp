#include "braceforge/json_io.hpp"

#include <fstream>

namespace braceforge {

namespace {

std::vector<std::vector<int>> table_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw invalid_input(std::string(what) + ": expected an array table");
  std::vector<std::vector<int>> t;
  for (const Json& row : j) {
    if (!row.is_array()) throw invalid_input(std::string(what) + ": expected array rows");
    t.emplace_back();
    for (const Json& v : row) {
      if (!v.is_number_integer())
        throw invalid_input(std::string(what) + ": expected integer entries");
      t.back().push_back(v.get<int>());
    }
  }
  return t;
}

}  // namespace

Json group_to_json(const FiniteGroup& G) {
  Json j;
  j["name"] = G.name;
  j["order"] = G.n;
  j["table"] = G.table_rows();
  j["labels"] = G.labels;
  return j;
}

GroupPtr group_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw invalid_input("group json: missing order or table");
  std::vector<std::vector<int>> t = table_from_json(j["table"], "group json");
  if (static_cast<int>(t.size()) != j["order"].get<int>())
    throw invalid_input("group json: order does not match the table");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  std::string name = j.contains("name") ? j["name"].get<std::string>() : "group";
  return make_group(name, t, labels);
}

Json matrix_to_json(const RbMatrix& m) {
  Json j;
  j["n"] = m.n;
  j["r"] = m.r;
  return j;
}

RbMatrix matrix_from_json(const Json& j) {
  if (!j.contains("n") || !j.contains("r"))
    throw invalid_input("matrix json: missing n or r");
  RbMatrix m;
  m.n = j["n"].get<int>();
  m.r = table_from_json(j["r"], "matrix json");
  if (static_cast<int>(m.r.size()) != m.n)
    throw invalid_input("matrix json: n does not match the matrix");
  for (const auto& row : m.r) {
    if (static_cast<int>(row.size()) != m.n)
      throw invalid_input("matrix json: matrix is not square");
    for (int v : row)
      if (v < -1 || v > 1) throw invalid_input("matrix json: entries must be in {-1,0,1}");
  }
  return m;
}

Json operator_to_json(const RbOperator& B) {
  Json j;
  j["group"] = B.group->name.empty() ? group_content_hash(*B.group) : B.group->name;
  j["weight"] = B.weight;
  j["images"] = B.images;
  return j;
}

RbOperator operator_from_json(const Json& j, const Catalog& catalog, GroupPtr group_override) {
  if (!j.contains("weight") || !j.contains("images"))
    throw invalid_input("operator json: missing weight or images");
  int weight = j["weight"].get<int>();
  if (weight != 1 && weight != -1)
    throw invalid_input("operator json: weight must be 1 or -1");
  GroupPtr G = group_override;
  if (!G && j.contains("group")) {
    std::string key = j["group"].get<std::string>();
    G = catalog.find(key);
    if (!G)
      for (const auto& [name, g] : catalog.entries)
        if (group_content_hash(*g) == key) {
          G = g;
          break;
        }
  }
  if (!G)
    throw invalid_input("operator json: group not resolvable; pass --group");
  GroupMap images = j["images"].get<GroupMap>();
  if (static_cast<int>(images.size()) != G->n)
    throw invalid_input("operator json: image count differs from group order");
  for (int v : images)
    if (v < 0 || v >= G->n) throw invalid_input("operator json: image out of range");
  PairCheck c = is_rb_operator(*G, images, weight);
  if (!c.ok)
    throw invalid_input("operator json: identity fails at pair (" +
                        std::to_string(c.witness[0]) + "," + std::to_string(c.witness[1]) +
                        ")");
  return {G, images, weight};
}

Json brace_to_json(const SkewBrace& A) {
  Json j;
  j["order"] = A.n();
  j["add"] = A.add->table_rows();
  j["circ"] = A.circ->table_rows();
  j["labels"] = A.labels();
  return j;
}

SkewBrace brace_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("add") || !j.contains("circ"))
    throw invalid_input("brace json: missing order, add or circ");
  std::vector<std::vector<int>> addt = table_from_json(j["add"], "brace json (add)");
  std::vector<std::vector<int>> circt = table_from_json(j["circ"], "brace json (circ)");
  if (static_cast<int>(addt.size()) != j["order"].get<int>())
    throw invalid_input("brace json: order does not match the tables");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  GroupPtr add = make_group("brace_add", addt, labels);
  return make_brace(add, circt);
}

Json solution_to_json(const YbeSolution& S) {
  Json j;
  j["order"] = S.n;
  std::vector<std::vector<std::array<int, 2>>> pairs(S.n);
  for (int x = 0; x < S.n; ++x) {
    pairs[x].resize(S.n);
    for (int y = 0; y < S.n; ++y) pairs[x][y] = {S.sigma(x, y), S.tau_of(x, y)};
  }
  j["pairs"] = pairs;
  return j;
}

YbeSolution solution_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("pairs"))
    throw invalid_input("solution json: missing order or pairs");
  YbeSolution S;
  S.n = j["order"].get<int>();
  const Json& pairs = j["pairs"];
  if (static_cast<int>(pairs.size()) != S.n)
    throw invalid_input("solution json: pairs does not match order");
  S.sig.assign(static_cast<size_t>(S.n) * S.n, 0);
  S.tau.assign(static_cast<size_t>(S.n) * S.n, 0);
  for (int x = 0; x < S.n; ++x) {
    if (static_cast<int>(pairs[x].size()) != S.n)
      throw invalid_input("solution json: ragged pairs");
    for (int y = 0; y < S.n; ++y) {
      const Json& p = pairs[x][y];
      if (!p.is_array() || p.size() != 2)
        throw invalid_input("solution json: each pair must be [s, t]");
      int s = p[0].get<int>(), t = p[1].get<int>();
      if (s < 0 || s >= S.n || t < 0 || t >= S.n)
        throw invalid_input("solution json: value out of range");
      S.sig[x * S.n + y] = s;
      S.tau[x * S.n + y] = t;
    }
  }
  return S;
}

Json rack_to_json(const Rack& R) {
  Json j;
  j["order"] = R.n;
  j["table"] = R.table;
  return j;
}

Rack rack_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("table"))
    throw invalid_input("rack json: missing order or table");
  Rack R;
  R.n = j["order"].get<int>();
  R.table = table_from_json(j["table"], "rack json");
  if (static_cast<int>(R.table.size()) != R.n)
    throw invalid_input("rack json: order does not match the table");
  for (const auto& row : R.table)
    if (static_cast<int>(row.size()) != R.n)
      throw invalid_input("rack json: table is not square");
  return R;
}

Json multibrace_to_json(const MultiBrace& M) {
  Json j;
  j["order"] = M.n;
  j["tables"] = M.tables;
  return j;
}

MultiBrace multibrace_from_json(const Json& j) {
  if (!j.contains("order") || !j.contains("tables"))
    throw invalid_input("multibrace json: missing order or tables");
  MultiBrace M;
  M.n = j["order"].get<int>();
  for (const Json& t : j["tables"]) M.tables.push_back(table_from_json(t, "multibrace json"));
  if (M.tables.empty()) throw invalid_input("multibrace json: no tables");
  for (const auto& t : M.tables)
    if (static_cast<int>(t.size()) != M.n)
      throw invalid_input("multibrace json: table size mismatch");
  return M;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw invalid_input("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write file: " + path);
  out << j.dump(2) << "\n";
}

}  // namespace braceforge
