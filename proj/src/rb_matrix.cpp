#include "braceforge/rb_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace braceforge {

RbMatrix zero_matrix(int n) {
  return {n, std::vector<std::vector<int>>(n, std::vector<int>(n, 0))};
}

RbMatrix neg_identity_matrix(int n) {
  RbMatrix m = zero_matrix(n);
  for (int i = 0; i < n; ++i) m.r[i][i] = -1;
  return m;
}

bool check_conditions(const RbMatrix& m) {
  const int n = m.n;
  const auto& r = m.r;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (r[i][k] < -1 || r[i][k] > 1) return false;
  // (1) row sign pattern tied to the diagonal entry
  for (int i = 0; i < n; ++i) {
    if (r[i][i] == 0) {
      for (int k = 0; k < n; ++k)
        if (k != i && r[i][k] != 0 && r[i][k] != 1) return false;
    } else if (r[i][i] == -1) {
      for (int k = 0; k < n; ++k)
        if (k != i && r[i][k] != 0 && r[i][k] != -1) return false;
    } else {
      return false;
    }
  }
  // (2) zero pair forces orthogonal rows outside {i,k}
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k || r[i][k] != 0 || r[k][i] != 0) continue;
      for (int l = 0; l < n; ++l)
        if (l != i && l != k && r[i][l] * r[k][l] != 0) return false;
    }
  // (3) nonzero entry forces r_ki = 0 and row agreement
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == k || r[i][k] == 0) continue;
      if (r[k][i] != 0) return false;
      for (int l = 0; l < n; ++l)
        if (l != i && l != k && r[k][l] != 0 && r[i][l] != r[i][k]) return false;
    }
  return true;
}

bool check_rb_identity_algebra(const RbMatrix& m) {
  // on basis pairs: for all i,j,k
  //   r_ik r_jk = r_ij r_jk + r_ji r_ik + d_ij r_ik
  const int n = m.n;
  const auto& r = m.r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        long long lhs = static_cast<long long>(r[i][k]) * r[j][k];
        long long rhs = static_cast<long long>(r[i][j]) * r[j][k] +
                        static_cast<long long>(r[j][i]) * r[i][k] +
                        (i == j ? r[i][k] : 0);
        if (lhs != rhs) return false;
      }
  return true;
}

std::vector<RbMatrix> enumerate_algebra_rb(int n) {
  if (n < 1 || n > 4) throw bound_exceeded("enumerate_algebra_rb: n must be in 1..4");
  // candidate rows are cut down a priori by the condition (1) dichotomy,
  // then whole matrices are filtered through check_conditions
  auto rows_for_index = [n](int i) {
    std::vector<std::vector<int>> res;
    std::vector<int> row(n);
    auto gen = [&](auto&& self, int k, int diag) -> void {
      if (k == n) {
        res.push_back(row);
        return;
      }
      if (k == i) {
        row[k] = diag;
        self(self, k + 1, diag);
        return;
      }
      // off-diagonal entries range over {0,1} or {-1,0} with the diagonal
      for (int v = diag; v <= diag + 1; ++v) {
        row[k] = v;
        self(self, k + 1, diag);
      }
    };
    for (int diag : {-1, 0}) gen(gen, 0, diag);
    std::sort(res.begin(), res.end());
    return res;
  };
  std::vector<std::vector<std::vector<int>>> per_index;
  for (int i = 0; i < n; ++i) per_index.push_back(rows_for_index(i));
  std::vector<RbMatrix> out;
  RbMatrix m = zero_matrix(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (check_conditions(m)) out.push_back(m);
      return;
    }
    for (const auto& row : per_index[i]) {
      m.r[i] = row;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const RbMatrix& a, const RbMatrix& b) { return a.r < b.r; });
  return out;
}

namespace {

RbMatrix permute_matrix(const RbMatrix& m, const std::vector<int>& p) {
  RbMatrix out = zero_matrix(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < m.n; ++k) out.r[p[i]][p[k]] = m.r[i][k];
  return out;
}

}  // namespace

MatrixOrbits algebra_rb_orbits(int n) {
  std::vector<RbMatrix> all = enumerate_algebra_rb(n);
  std::set<std::vector<std::vector<int>>> seen;
  MatrixOrbits res;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  for (const RbMatrix& m : all) {
    if (seen.count(m.r)) continue;
    std::set<std::vector<std::vector<int>>> orbit;
    for (const auto& perm : perms) orbit.insert(permute_matrix(m, perm).r);
    for (const auto& o : orbit) seen.insert(o);
    res.representatives.push_back({n, *orbit.begin()});
    res.orbit_sizes.push_back(static_cast<int>(orbit.size()));
  }
  res.orbit_count = static_cast<int>(res.representatives.size());
  return res;
}

bool is_upper_triangular(const RbMatrix& m) {
  for (int i = 0; i < m.n; ++i)
    for (int k = 0; k < i; ++k)
      if (m.r[i][k] != 0) return false;
  return true;
}

LiftedOperator group_rb_from_matrix(const RbMatrix& m, const GroupPtr& G,
                                    const std::vector<GroupMap>& psis) {
  if (!check_conditions(m))
    throw invalid_input("group_rb_from_matrix: matrix is not a valid RB matrix");
  if (!is_upper_triangular(m))
    throw invalid_input("group_rb_from_matrix: matrix must be upper-triangular");
  if (static_cast<int>(psis.size()) != m.n - 1)
    throw invalid_input("group_rb_from_matrix: need automorphisms psi_2..psi_n");
  for (const GroupMap& psi : psis)
    if (static_cast<int>(psi.size()) != G->n || !is_bijective(psi) ||
        !is_homomorphism(*G, *G, psi))
      throw invalid_input("group_rb_from_matrix: psi is not an automorphism of G");
  const int n = m.n;
  const int base = G->n;
  GroupPtr power = direct_power(G, n);
  // direct_power indexes tuples big-endian: idx = sum g_i * base^(n-i)
  std::vector<long long> weight(n);
  weight[n - 1] = 1;
  for (int i = n - 2; i >= 0; --i) weight[i] = weight[i + 1] * base;
  auto decode = [&](int idx, std::vector<int>& g) {
    for (int i = 0; i < n; ++i) {
      g[i] = static_cast<int>(idx / weight[i]);
      idx = static_cast<int>(idx % weight[i]);
    }
  };
  auto psi_at = [&](int j) -> const GroupMap& { return psis[j - 2]; };  // psi_j, j>=2
  GroupMap images(power->n);
  std::vector<int> g(n), t(n);
  for (int idx = 0; idx < power->n; ++idx) {
    decode(idx, g);
    // t_1 = g_1^{r_11}; t_i = g_i^{r_ii} psi_i(g_{i-1}^{r_{i-1,i}} psi_{i-1}(...))
    t[0] = G->power(g[0], m.r[0][0]);
    for (int i = 1; i < n; ++i) {
      int u = G->power(g[0], m.r[0][i]);  // innermost: g_1^{r_1,i+1}
      for (int j = 1; j < i; ++j) u = G->mul(G->power(g[j], m.r[j][i]), psi_at(j + 1)[u]);
      t[i] = G->mul(G->power(g[i], m.r[i][i]), psi_at(i + 1)[u]);
    }
    long long enc = 0;
    for (int i = 0; i < n; ++i) enc += t[i] * weight[i];
    images[idx] = static_cast<int>(enc);
  }
  PairCheck c = is_rb_operator(*power, images, 1);
  if (!c.ok)
    throw internal_error("group_rb_from_matrix: lifted map failed RB verification");
  return {power, {power, std::move(images), 1}};
}

}  // namespace braceforge
