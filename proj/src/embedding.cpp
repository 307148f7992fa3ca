#include "braceforge/embedding.hpp"

#include <algorithm>

namespace braceforge {

TildeGroup build_tilde(const SkewBrace& A, int bound) {
  const int n = A.n();
  if (n * n > bound) throw bound_exceeded("build_tilde: |G|^2 exceeds bound");
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const int N = n * n;
  std::vector<std::vector<int>> t(N, std::vector<int>(N));
  std::vector<std::string> lab(N);
  auto enc = [n](int x, int y) { return x * n + y; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      lab[enc(x, y)] = "(" + G.labels[x] + "," + G.labels[y] + ")";
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w)
          t[enc(x, y)][enc(z, w)] = enc(C.mul(x, z), G.mul(y, A.lambda(x, w)));
    }
  TildeGroup T;
  T.source = A;
  try {
    T.tilde = make_group(G.name + "~", t, lab);
  } catch (const invalid_input& e) {
    throw internal_error(std::string("build_tilde: pair product is not a group: ") + e.what());
  }
  T.diag.parent = T.tilde;
  T.axis.parent = T.tilde;
  for (int g = 0; g < n; ++g) {
    T.diag.members.push_back(enc(g, g));
    T.axis.members.push_back(enc(g, 0));
  }
  std::sort(T.diag.members.begin(), T.diag.members.end());
  std::sort(T.axis.members.begin(), T.axis.members.end());
  if (!is_subgroup(*T.tilde, T.diag.members) || !is_subgroup(*T.tilde, T.axis.members))
    throw internal_error("build_tilde: H or L is not a subgroup");
  try {
    T.splitting = splitting_rb(T.tilde, T.diag, T.axis);
  } catch (const invalid_input& e) {
    throw internal_error(std::string("build_tilde: factorization H*L is not exact: ") +
                         e.what());
  }
  // closed form B((x,y)) = (x^{o(-1)} o y, e)
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (T.splitting.images[enc(x, y)] != enc(C.mul(C.inverse(x), y), 0))
        throw internal_error("build_tilde: splitting operator differs from closed form");
  return T;
}

EmbeddingReport verify_embedding(const SkewBrace& A, const TildeGroup* prebuilt) {
  TildeGroup local;
  const TildeGroup* T = prebuilt;
  if (T == nullptr) {
    local = build_tilde(A);
    T = &local;
  }
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const FiniteGroup& Tg = *T->tilde;
  const int n = A.n();
  EmbeddingReport r;
  r.add_homomorphism = true;
  r.circ_homomorphism = true;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      if (Tg.mul(T->psi(g), T->psi(h)) != T->psi(G.mul(g, h))) r.add_homomorphism = false;
      if (T->circ(T->psi(g), T->psi(h)) != T->psi(C.mul(g, h))) r.circ_homomorphism = false;
    }
  std::vector<char> hit(Tg.n, 0);
  r.injective = true;
  for (int g = 0; g < n; ++g) {
    if (hit[T->psi(g)]) r.injective = false;
    hit[T->psi(g)] = 1;
  }
  r.star_commutator = true;
  for (int g = 0; g < n && r.star_commutator; ++g)
    for (int h = 0; h < n; ++h) {
      int u = T->encode(0, h), v = T->encode(g, 0);
      if (Tg.comm(u, v) != T->encode(0, A.star(g, h))) {
        r.star_commutator = false;
        break;
      }
    }
  if (!r.add_homomorphism || !r.circ_homomorphism || !r.injective || !r.star_commutator)
    throw internal_error("verify_embedding: a theorem-backed check failed");
  return r;
}

ZetaReport zeta_series(const SkewBrace& A, int bound) {
  TildeGroup T = build_tilde(A, bound);
  const int n = A.n();
  ZetaReport r;
  r.series_strong_left_ideals = true;
  InvariantSubsets inv = invariant_subsets(A);
  std::vector<int> cur = inv.left_center.members;  // zeta_1 = Z_l
  r.series.push_back(cur);
  while (true) {
    // psi identifies zeta_k with the subgroup {(e,i)} of the tilde group,
    // whose member indices are exactly the brace indices
    if (!is_strong_left_ideal(A, cur)) {
      r.series_strong_left_ideals = false;
      break;
    }
    Subgroup N;
    N.parent = T.tilde;
    N.members = cur;  // encode(0, i) = i
    if (!is_normal(N)) {
      r.series_strong_left_ideals = false;  // psi-normality criterion
      break;
    }
    std::vector<int> proj = coset_projection(N);
    GroupPtr Q = quotient_group(N);
    std::vector<char> central(Q->n, 0);
    for (int z : center(*Q)) central[z] = 1;
    std::vector<int> next;
    for (int g = 0; g < n; ++g)
      if (central[proj[T.psi(g)]]) next.push_back(g);
    if (next == cur) break;
    r.series.push_back(next);
    cur = next;
  }
  r.strong_left_nilpotent = (static_cast<int>(cur.size()) == n) && r.series_strong_left_ideals;
  if (r.strong_left_nilpotent) {
    StarSeries ss = star_and_series(A);
    r.implies_left_star_nilpotent = ss.left_star_nilpotent;
    r.implies_additive_nilpotent = is_nilpotent_group(A.add);
    r.ideals_meet_left_center = true;
    std::vector<char> in_zl(n, 0);
    for (int z : r.series[0]) in_zl[z] = 1;
    for (const Subgroup& S : all_subgroups(A.add)) {
      if (S.order() == 1 || !is_strong_left_ideal(A, S.members)) continue;
      bool meets = false;
      for (int m : S.members)
        if (m != 0 && in_zl[m]) meets = true;
      if (S.order() > 1 && !meets) r.ideals_meet_left_center = false;
    }
    if (!r.implies_left_star_nilpotent || !r.implies_additive_nilpotent ||
        !r.ideals_meet_left_center)
      throw internal_error("zeta_series: a consequence of strong left nilpotency failed");
  }
  return r;
}

RbOperator recover_rb_complete(const SkewBrace& A) {
  const FiniteGroup& G = *A.add;
  const int n = G.n;
  StructureReport sr = structure_report(A.add, std::max(n, 24));
  if (!sr.is_complete)
    throw invalid_input("recover_rb_complete: additive group is not complete");
  GroupMap B(n, -1);
  for (int g = 0; g < n; ++g) {
    int found = -1;
    for (int x = 0; x < n; ++x) {
      bool match = true;
      for (int h = 0; h < n; ++h)
        if (A.lambda(g, h) != G.conj(h, x)) {  // lambda_g(h) = x^{-1} h x
          match = false;
          break;
        }
      if (match) {
        if (found != -1)
          throw internal_error("recover_rb_complete: conjugator is not unique");
        found = x;
      }
    }
    if (found == -1)
      throw internal_error("recover_rb_complete: lambda_g is not inner");
    B[g] = G.inverse(found);
  }
  PairCheck c = is_rb_operator(G, B, 1);
  if (!c.ok) throw internal_error("recover_rb_complete: recovered map is not an RB operator");
  RbOperator op{A.add, B, 1};
  SkewBrace round = brace_from_rb(op);
  if (round.circ->tab != A.circ->tab || round.add->tab != A.add->tab)
    throw internal_error("recover_rb_complete: round trip changed the brace");
  return op;
}

}  // namespace braceforge
