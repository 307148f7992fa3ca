#include "braceforge/ybe.hpp"

#include <algorithm>

namespace braceforge {

SolutionReport verify_solution(const YbeSolution& S) {
  const int n = S.n;
  SolutionReport r;
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  r.bijective = true;
  for (int x = 0; x < n && r.bijective; ++x)
    for (int y = 0; y < n; ++y) {
      int key = S.sigma(x, y) * n + S.tau_of(x, y);
      if (seen[key]) {
        r.bijective = false;
        break;
      }
      seen[key] = 1;
    }
  r.braid = true;
  for (int x = 0; x < n && r.braid; ++x)
    for (int y = 0; y < n && r.braid; ++y)
      for (int z = 0; z < n; ++z) {
        // left: (S x id)(id x S)(S x id)
        auto [a, b] = S.apply(x, y);
        auto [c, d] = S.apply(b, z);
        auto [p, q] = S.apply(a, c);
        // right: (id x S)(S x id)(id x S)
        auto [u, v] = S.apply(y, z);
        auto [w, s] = S.apply(x, u);
        auto [t2, v2] = S.apply(s, v);
        if (!(p == w && q == t2 && d == v2)) {
          r.braid = false;
          r.braid_witness = {x, y, z};
          break;
        }
      }
  r.left_nondegenerate = true;
  r.nondegenerate = true;
  for (int x = 0; x < n; ++x) {
    std::vector<char> hit(n, 0);
    for (int y = 0; y < n; ++y) hit[S.sigma(x, y)] = 1;
    if (std::count(hit.begin(), hit.end(), 1) != n) {
      r.left_nondegenerate = false;
      r.nondegenerate = false;
      break;
    }
  }
  if (r.nondegenerate)
    for (int y = 0; y < n; ++y) {
      std::vector<char> hit(n, 0);
      for (int x = 0; x < n; ++x) hit[S.tau_of(x, y)] = 1;
      if (std::count(hit.begin(), hit.end(), 1) != n) {
        r.nondegenerate = false;
        break;
      }
    }
  r.involutive = true;
  for (int x = 0; x < n && r.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [a, b] = S.apply(x, y);
      auto [p, q] = S.apply(a, b);
      if (p != x || q != y) {
        r.involutive = false;
        r.involutive_witness = {x, y};
        break;
      }
    }
  return r;
}

YbeSolution flip_solution(int n) {
  YbeSolution S;
  S.n = n;
  S.sig.resize(static_cast<size_t>(n) * n);
  S.tau.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      S.sig[x * n + y] = y;
      S.tau[x * n + y] = x;
    }
  return S;
}

YbeSolution solution_from_brace(const SkewBrace& A) {
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const int n = G.n;
  YbeSolution S;
  S.n = n;
  S.sig.resize(static_cast<size_t>(n) * n);
  S.tau.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int lab = A.lambda(a, b);
      int ab = C.mul(a, b);
      int conj = G.mul(G.mul(G.inverse(ab), a), ab);
      // lambda_c^{-1}(d) = c^{o(-1)} o (c d)
      int second = C.mul(C.inverse(lab), G.mul(lab, conj));
      S.sig[a * n + b] = lab;
      S.tau[a * n + b] = second;
    }
  SolutionReport r = verify_solution(S);
  if (!r.solution() || !r.nondegenerate)
    throw internal_error("solution_from_brace: construction failed verification");
  return S;
}

YbeSolution solution_from_rb(const RbOperator& B) {
  if (B.weight != 1) throw invalid_input("solution_from_rb: weight must be 1");
  const FiniteGroup& G = *B.group;
  const int n = G.n;
  YbeSolution S;
  S.n = n;
  S.sig.resize(static_cast<size_t>(n) * n);
  S.tau.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    const int ba = B.images[a];
    for (int b = 0; b < n; ++b) {
      int lab = G.mul(G.mul(ba, b), G.inverse(ba));
      int w = G.mul(lab, B.images[lab]);
      S.sig[a * n + b] = lab;
      S.tau[a * n + b] = G.conj(a, w);
    }
  }
  YbeSolution via_brace = solution_from_brace(brace_from_rb(B));
  if (S.sig != via_brace.sig || S.tau != via_brace.tau)
    throw internal_error("solution_from_rb: closed formula differs from the brace route");
  return S;
}

ConjugatedSolution conjugate_solution(const YbeSolution& S, const PairMap& T) {
  const int n = S.n;
  if (static_cast<int>(T.size()) != n * n)
    throw invalid_input("conjugate_solution: T has wrong size");
  std::vector<int> tinv(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = T[x * n + y];
      if (u < 0 || u >= n || v < 0 || v >= n || tinv[u * n + v] != -1)
        throw invalid_input("conjugate_solution: T is not a bijection");
      tinv[u * n + v] = x * n + y;
    }
  ConjugatedSolution out;
  out.sol.n = n;
  out.sol.sig.resize(static_cast<size_t>(n) * n);
  out.sol.tau.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int pre = tinv[x * n + y];
      auto [a, b] = S.apply(pre / n, pre % n);
      auto [u, v] = T[a * n + b];
      out.sol.sig[x * n + y] = u;
      out.sol.tau[x * n + y] = v;
    }
  out.report = verify_solution(out.sol);
  return out;
}

RackReport rack_quandle_check(const std::vector<std::vector<int>>& table) {
  RackReport r;
  const int n = static_cast<int>(table.size());
  r.r1 = true;
  for (int x = 0; x < n && r.r1; ++x) {
    std::vector<char> hit(n, 0);
    for (int y = 0; y < n; ++y) {
      int v = table[y][x];  // I_x(y) = y * x
      if (v < 0 || v >= n || hit[v]) {
        r.r1 = false;
        r.r1_witness = x;
        break;
      }
      hit[v] = 1;
    }
  }
  r.r2 = true;
  for (int x = 0; x < n && r.r2; ++x)
    for (int y = 0; y < n && r.r2; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = table[table[x][y]][z];
        int rhs = table[table[x][z]][table[y][z]];
        if (lhs < 0 || lhs >= n || rhs < 0 || rhs >= n || lhs != rhs) {
          r.r2 = false;
          r.r2_witness = {x, y, z};
          break;
        }
      }
  r.quandle = r.r1 && r.r2;
  for (int x = 0; x < n && r.quandle; ++x)
    if (table[x][x] != x) {
      r.quandle = false;
      r.quandle_witness = x;
    }
  return r;
}

RackFormResult rack_form(const YbeSolution& S) {
  const int n = S.n;
  SolutionReport pre = verify_solution(S);
  if (!pre.left_nondegenerate)
    throw invalid_input("rack_form: solution is not left non-degenerate");
  // sigma inverses
  std::vector<std::vector<int>> sig_inv(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) sig_inv[x][S.sigma(x, y)] = y;
  PairMap T(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) T[x * n + y] = {x, S.sigma(x, y)};
  RackFormResult out;
  ConjugatedSolution conj = conjugate_solution(S, T);
  out.conjugated = conj.sol;
  out.report = conj.report;
  out.displayed_form = true;
  for (int x = 0; x < n && out.displayed_form; ++x)
    for (int y = 0; y < n; ++y) {
      int expected_first = y;
      int expected_second = S.sigma(y, S.tau_of(x, sig_inv[x][y]));
      if (out.conjugated.sigma(x, y) != expected_first ||
          out.conjugated.tau_of(x, y) != expected_second) {
        out.displayed_form = false;
        break;
      }
    }
  if (!out.displayed_form)
    throw internal_error("rack_form: conjugated solution differs from the displayed form");
  // uniqueness condition: for all (a,b) a unique x with
  // tau_{sigma_x^{-1}(a)}(x) = sigma_a^{-1}(b)
  out.cond_unique = true;
  for (int a = 0; a < n && out.cond_unique; ++a)
    for (int b = 0; b < n; ++b) {
      int target = sig_inv[a][b];
      int count = 0;
      for (int x = 0; x < n; ++x)
        if (S.tau_of(x, sig_inv[x][a]) == target) ++count;
      if (count != 1) {
        out.cond_unique = false;
        break;
      }
    }
  if (out.cond_unique) {
    out.rack.n = n;
    out.rack.table.assign(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out.rack.table[x][y] = out.conjugated.tau_of(x, y);  // x*y from S'(x,y) = (y, x*y)
    out.rack_report = rack_quandle_check(out.rack.table);
  }
  return out;
}

ConjQuandle conj_quandle(const GroupPtr& G) {
  const int n = G->n;
  ConjQuandle out;
  out.rack.n = n;
  out.rack.table.assign(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) out.rack.table[x][y] = G->conj(x, y);
  RackReport r = rack_quandle_check(out.rack.table);
  if (!r.rack() || !r.quandle)
    throw internal_error("conj_quandle: conjugation table is not a quandle");
  out.inner_relation = true;
  // I_x(u) = u * x; check I_{x*y} = I_y I_x I_y^{-1}
  std::vector<std::vector<int>> inner(n, std::vector<int>(n)), inner_inv(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u) inner[x][u] = out.rack.table[u][x];
  for (int x = 0; x < n; ++x)
    for (int u = 0; u < n; ++u) inner_inv[x][inner[x][u]] = u;
  for (int x = 0; x < n && out.inner_relation; ++x)
    for (int y = 0; y < n && out.inner_relation; ++y) {
      int xy = out.rack.table[x][y];
      for (int u = 0; u < n; ++u)
        if (inner[xy][u] != inner[y][inner[x][inner_inv[y][u]]]) {
          out.inner_relation = false;
          break;
        }
    }
  if (!out.inner_relation)
    throw internal_error("conj_quandle: inner automorphism relation fails");
  return out;
}

YbeSolution solution_from_rack(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  YbeSolution S;
  S.n = n;
  S.sig.assign(static_cast<size_t>(n) * n, 0);
  S.tau.assign(static_cast<size_t>(n) * n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = table[x][y];
      if (v < 0 || v >= n) throw invalid_input("solution_from_rack: entry out of range");
      S.sig[x * n + y] = y;
      S.tau[x * n + y] = v;  // tau_y(x) = x * y
    }
  return S;
}

DirectRbResult direct_rb_solution(const RbOperator& B) {
  if (B.weight != 1) throw invalid_input("direct_rb_solution: weight must be 1");
  const FiniteGroup& G = *B.group;
  const int n = G.n;
  DirectRbResult out;
  out.sol.n = n;
  out.sol.sig.resize(static_cast<size_t>(n) * n);
  out.sol.tau.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int by = B.images[y];
      out.sol.sig[x * n + y] = y;
      out.sol.tau[x * n + y] = G.mul(G.mul(by, x), G.inverse(by));
    }
  out.report = verify_solution(out.sol);
  out.identity = true;
  for (int b = 0; b < n && out.identity; ++b)
    for (int c = 0; c < n; ++c) {
      int lhs = G.conj(G.inverse(B.images[b]), B.images[c]);
      int rhs = B.images[G.conj(b, B.images[c])];
      if (lhs != rhs) {
        out.identity = false;
        out.identity_witness = {b, c};
        break;
      }
    }
  bool is_solution = out.report.solution() && out.report.nondegenerate;
  if (is_solution != out.identity)
    throw internal_error("direct_rb_solution: criterion sides disagree");
  return out;
}

bool is_rack_type(const YbeSolution& S) {
  const int n = S.n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (S.sigma(x, y) != y) return false;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) table[x][y] = S.tau_of(x, y);
  return rack_quandle_check(table).rack();
}

}  // namespace braceforge
