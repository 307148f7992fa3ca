#include "braceforge/multibrace.hpp"

namespace braceforge {

bool MultibraceReport::ok() const {
  for (bool b : group_ok)
    if (!b) return false;
  for (bool b : axiom_ok)
    if (!b) return false;
  return true;
}

MultibraceReport verify_multibrace(const MultiBrace& M) {
  MultibraceReport r;
  const int n = M.n;
  std::vector<GroupPtr> groups;
  for (const auto& t : M.tables) {
    TableDiagnostics d = verify_group_table(t);
    r.group_ok.push_back(d.ok);
    groups.push_back(d.ok ? make_group("level", t, {}) : nullptr);
  }
  for (int i = 1; i <= M.k(); ++i) {
    bool ok = r.group_ok[i] && r.group_ok[i - 1];
    if (ok) {
      const FiniteGroup& hi = *groups[i];
      const FiniteGroup& lo = *groups[i - 1];
      for (int a = 0; a < n && ok; ++a)
        for (int b = 0; b < n && ok; ++b)
          for (int c = 0; c < n; ++c) {
            int lhs = hi.mul(a, lo.mul(b, c));
            int rhs = lo.mul(lo.mul(hi.mul(a, b), lo.inverse(a)), hi.mul(a, c));
            if (lhs != rhs) {
              ok = false;
              if (r.witness[0] == -1) r.witness = {i, a, b, c};
              break;
            }
          }
    }
    r.axiom_ok.push_back(ok);
  }
  return r;
}

MultiBrace build_multibrace(const RbOperator& B, int k, int cap) {
  if (B.weight != 1) throw invalid_input("build_multibrace: weight must be 1");
  if (k < 1 || k > cap) throw bound_exceeded("build_multibrace: k must be in 1..cap");
  const int n = B.group->n;
  MultiBrace M;
  M.n = n;
  M.tables.push_back(B.group->table_rows());
  GroupPtr level = B.group;
  for (int i = 0; i < k; ++i) {
    // B stays an RB operator on each level, so the derived product of
    // (level, B) is the next level
    RbOperator Bi{level, B.images, 1};
    PairCheck c = is_rb_operator(*level, B.images, 1);
    if (!c.ok)
      throw internal_error("build_multibrace: B is not an RB operator on level " +
                           std::to_string(i));
    GroupPtr next = derived_circle_group(Bi);
    M.tables.push_back(next->table_rows());
    level = next;
  }
  MultibraceReport r = verify_multibrace(M);
  if (!r.ok()) throw internal_error("build_multibrace: tower failed verification");
  return M;
}

}  // namespace braceforge
