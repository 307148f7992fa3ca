#include "braceforge/skew_brace.hpp"

#include <algorithm>

namespace braceforge {

BraceReport verify_brace(const SkewBrace& A) {
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const int n = G.n;
  BraceReport r;
  r.left = true;
  r.right = true;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (r.left) {
          int lhs = C.mul(a, G.mul(b, c));
          int rhs = G.mul(G.mul(C.mul(a, b), G.inverse(a)), C.mul(a, c));
          if (lhs != rhs) {
            r.left = false;
            r.left_witness = {a, b, c};
          }
        }
        if (r.right) {
          int lhs = C.mul(G.mul(b, c), a);
          int rhs = G.mul(G.mul(C.mul(b, a), G.inverse(a)), C.mul(c, a));
          if (lhs != rhs) {
            r.right = false;
            r.right_witness = {a, b, c};
          }
        }
        if (!r.left && !r.right) goto done;
      }
done:
  r.two_sided = r.left && r.right;
  bool equal = true, opp = true;
  for (int a = 0; a < n && (equal || opp); ++a)
    for (int b = 0; b < n; ++b) {
      if (C.mul(a, b) != G.mul(a, b)) equal = false;
      if (G.mul(a, b) != C.mul(b, a)) opp = false;
    }
  r.trivial = equal || opp;
  r.trivial_kind = equal && opp ? "equal+opposite" : equal ? "equal" : opp ? "opposite" : "";
  r.rump_brace = G.is_abelian();
  return r;
}

SkewBrace make_brace(const GroupPtr& add, const std::vector<std::vector<int>>& circ_table) {
  TableDiagnostics d = verify_group_table(circ_table);
  if (!d.ok)
    throw invalid_input("brace: multiplicative table: " + d.axiom + ": " + d.message);
  if (static_cast<int>(circ_table.size()) != add->n)
    throw invalid_input("brace: table sizes differ");
  GroupPtr circ = make_group(add->name + "_circ", circ_table, add->labels);
  SkewBrace A{add, circ};
  BraceReport r = verify_brace(A);
  if (!r.left)
    throw invalid_input("brace: left axiom fails at (" +
                        std::to_string(r.left_witness[0]) + "," +
                        std::to_string(r.left_witness[1]) + "," +
                        std::to_string(r.left_witness[2]) + ")");
  return A;
}

SkewBrace trivial_brace(const GroupPtr& G) {
  return SkewBrace{G, G};
}

SkewBrace opposite_brace(const GroupPtr& G) {
  GroupPtr circ = make_group(G->name + "_circ", opposite_group(G)->table_rows(), G->labels);
  return SkewBrace{G, circ};
}

namespace {

SkewBrace brace_from_tables(const GroupPtr& add, const std::vector<std::vector<int>>& circ,
                            const char* what) {
  try {
    return make_brace(add, circ);
  } catch (const invalid_input& e) {
    throw internal_error(std::string(what) + ": " + e.what());
  }
}

}  // namespace

SkewBrace brace_from_rb(const RbOperator& B) {
  if (B.weight != 1) throw invalid_input("brace_from_rb: weight must be 1");
  const FiniteGroup& G = *B.group;
  std::vector<std::vector<int>> circ(G.n, std::vector<int>(G.n));
  for (int x = 0; x < G.n; ++x) {
    const int bx = B.images[x];
    for (int y = 0; y < G.n; ++y)
      circ[x][y] = G.mul(G.mul(G.mul(x, bx), y), G.inverse(bx));
  }
  return brace_from_tables(B.group, circ, "brace_from_rb");
}

SkewBrace brace_from_rb_neg1(const RbOperator& C) {
  if (C.weight != -1) throw invalid_input("brace_from_rb_neg1: weight must be -1");
  const FiniteGroup& G = *C.group;
  std::vector<std::vector<int>> circ(G.n, std::vector<int>(G.n));
  for (int x = 0; x < G.n; ++x) {
    const int cx = C.images[x];
    for (int y = 0; y < G.n; ++y)
      circ[x][y] = G.mul(G.mul(G.mul(cx, y), G.inverse(cx)), x);
  }
  SkewBrace A = brace_from_tables(C.group, circ, "brace_from_rb_neg1");
  if (G.is_abelian() && !verify_brace(A).trivial)
    throw internal_error("brace_from_rb_neg1: weight -1 brace on abelian group not trivial");
  return A;
}

LambdaReport lambda_analysis(const SkewBrace& A, const RbOperator* source) {
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const int n = G.n;
  LambdaReport r;
  r.lambda.assign(n, GroupMap(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) r.lambda[a][b] = A.lambda(a, b);
  r.automorphisms = true;
  for (int a = 0; a < n; ++a)
    if (!is_bijective(r.lambda[a]) || !is_homomorphism(G, G, r.lambda[a])) {
      r.automorphisms = false;
      break;
    }
  r.circ_homomorphism = true;
  for (int a = 0; a < n && r.circ_homomorphism; ++a)
    for (int b = 0; b < n; ++b)
      if (r.lambda[C.mul(a, b)] != compose(r.lambda[a], r.lambda[b])) {
        r.circ_homomorphism = false;
        break;
      }
  r.inverse_formula = true;
  for (int a = 0; a < n && r.inverse_formula; ++a) {
    GroupMap inv = inverse_map(r.lambda[a]);
    const int a_circ_inv = C.inverse(a);
    for (int b = 0; b < n; ++b)
      if (inv[b] != C.mul(a_circ_inv, G.mul(a, b))) {
        r.inverse_formula = false;
        break;
      }
  }
  if (!r.automorphisms || !r.circ_homomorphism || !r.inverse_formula)
    throw internal_error("lambda_analysis: lambda properties fail on a verified brace");
  if (source != nullptr) {
    r.rb_conjugation = true;
    for (int a = 0; a < n && r.rb_conjugation; ++a) {
      const int ba = source->images[a];
      for (int b = 0; b < n; ++b)
        if (r.lambda[a][b] != G.mul(G.mul(ba, b), G.inverse(ba))) {
          r.rb_conjugation = false;
          break;
        }
    }
    if (!r.rb_conjugation)
      throw internal_error("lambda_analysis: lambda is not conjugation by B(a)");
  }
  return r;
}

SkewBrace brace_from_regular_subgroup(const HolomorphGroup& hol, const Subgroup& H) {
  const FiniteGroup& G = *hol.base;
  const int n = G.n;
  if (H.order() != n)
    throw invalid_input("brace_from_regular_subgroup: subgroup order differs from |G|");
  std::vector<int> member_of(n, -1);  // a -> holomorph element (f, a)
  for (int m : H.members) {
    int a = hol.elem_of(m);
    if (member_of[a] != -1)
      throw invalid_input("brace_from_regular_subgroup: subgroup is not regular");
    member_of[a] = m;
  }
  std::vector<std::vector<int>> circ(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const GroupMap& f = hol.auts[hol.aut_of(member_of[a])];
    for (int b = 0; b < n; ++b) circ[a][b] = G.mul(a, f[b]);
  }
  SkewBrace A = brace_from_tables(hol.base, circ, "brace_from_regular_subgroup");
  // a -> (f_a, a) must be an isomorphism (G, o) -> H
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (hol.hol->mul(member_of[a], member_of[b]) != member_of[A.circ->mul(a, b)])
        throw internal_error("brace_from_regular_subgroup: (G,o) -> H is not an isomorphism");
  return A;
}

std::vector<SkewBrace> enumerate_braces(const GroupPtr& G, int group_bound,
                                        int hol_bound, bool dedup) {
  HolomorphGroup hol = holomorph(G, hol_bound);
  std::vector<Subgroup> regs = regular_subgroups(hol, group_bound);
  std::vector<SkewBrace> out;
  for (const Subgroup& H : regs) out.push_back(brace_from_regular_subgroup(hol, H));
  if (dedup) {
    std::vector<SkewBrace> unique_braces;
    for (const SkewBrace& A : out) {
      bool dup = false;
      for (const SkewBrace& B : unique_braces)
        if (brace_isomorphic(A, B)) {
          dup = true;
          break;
        }
      if (!dup) unique_braces.push_back(A);
    }
    return unique_braces;
  }
  return out;
}

StarSeries star_and_series(const SkewBrace& A, const RbOperator* source) {
  const FiniteGroup& G = *A.add;
  const int n = G.n;
  StarSeries r;
  r.star.assign(n, std::vector<int>(n));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) r.star[g][h] = A.star(g, h);
  if (source != nullptr) {
    r.rb_commutator_form = true;
    for (int g = 0; g < n && r.rb_commutator_form; ++g)
      for (int h = 0; h < n; ++h)
        if (r.star[g][h] != G.comm(G.inverse(source->images[g]), G.inverse(h))) {
          r.rb_commutator_form = false;
          break;
        }
    if (!r.rb_commutator_form)
      throw internal_error("star_and_series: g*h != [B(g)^{-1}, h^{-1}]");
  }
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  r.series.push_back(cur);
  while (true) {
    std::vector<int> gens;
    for (int g = 0; g < n; ++g)
      for (int h : cur) gens.push_back(r.star[g][h]);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<int> next = subgroup_closure(A.add, gens).members;
    if (next == cur) break;
    r.series.push_back(next);
    cur = next;
  }
  r.left_star_nilpotent = (cur.size() == 1);
  return r;
}

InvariantSubsets invariant_subsets(const SkewBrace& A) {
  const FiniteGroup& G = *A.add;
  const FiniteGroup& C = *A.circ;
  const int n = G.n;
  std::vector<int> zg = center(G);
  InvariantSubsets r;
  r.socle.parent = A.add;
  r.left_center.parent = A.add;
  r.annihilator.parent = A.add;
  for (int a : zg) {
    bool soc = true, lc = true;
    for (int b = 0; b < n; ++b) {
      if (C.mul(a, b) != G.mul(a, b)) soc = false;
      if (C.mul(b, a) != G.mul(b, a)) lc = false;
      if (!soc && !lc) break;
    }
    if (soc) r.socle.members.push_back(a);
    if (lc) r.left_center.members.push_back(a);
  }
  std::set_intersection(r.socle.members.begin(), r.socle.members.end(),
                        r.left_center.members.begin(), r.left_center.members.end(),
                        std::back_inserter(r.annihilator.members));
  return r;
}

bool is_left_ideal(const SkewBrace& A, const std::vector<int>& I) {
  if (!is_subgroup(*A.add, I)) return false;
  std::vector<char> in(A.n(), 0);
  for (int i : I) in[i] = 1;
  for (int a = 0; a < A.n(); ++a)
    for (int i : I)
      if (!in[A.lambda(a, i)]) return false;
  return true;
}

bool is_strong_left_ideal(const SkewBrace& A, const std::vector<int>& I) {
  if (!is_left_ideal(A, I)) return false;
  Subgroup s;
  s.parent = A.add;
  s.members = I;
  return is_normal(s);
}

bool is_ideal(const SkewBrace& A, const std::vector<int>& I) {
  if (!is_strong_left_ideal(A, I)) return false;
  Subgroup s;
  s.parent = A.circ;
  s.members = I;
  return is_subgroup(*A.circ, I) && is_normal(s);
}

SkewBrace quotient_brace(const SkewBrace& A, const std::vector<int>& I) {
  if (!is_ideal(A, I)) throw invalid_input("quotient_brace: subset is not an ideal");
  Subgroup N;
  N.parent = A.add;
  N.members = I;
  std::vector<int> proj = coset_projection(N);
  const int q = *std::max_element(proj.begin(), proj.end()) + 1;
  std::vector<int> rep(q, -1);
  for (int g = 0; g < A.n(); ++g)
    if (rep[proj[g]] == -1) rep[proj[g]] = g;
  // additive and circle cosets coincide for an ideal (a o I = aI)
  std::vector<std::vector<int>> addt(q, std::vector<int>(q)), circt(q, std::vector<int>(q));
  std::vector<std::string> lab(q);
  for (int a = 0; a < q; ++a) {
    lab[a] = "[" + A.add->labels[rep[a]] + "]";
    for (int b = 0; b < q; ++b) {
      addt[a][b] = proj[A.add->mul(rep[a], rep[b])];
      circt[a][b] = proj[A.circ->mul(rep[a], rep[b])];
    }
  }
  GroupPtr qadd = make_group(A.add->name + "/I", addt, lab);
  try {
    return make_brace(qadd, circt);
  } catch (const invalid_input& e) {
    throw internal_error(std::string("quotient_brace: ") + e.what());
  }
}

LambdaHomReport is_lambda_homomorphic(const SkewBrace& A, const RbOperator* source) {
  const FiniteGroup& G = *A.add;
  const int n = G.n;
  LambdaHomReport r;
  std::vector<GroupMap> lam(n, GroupMap(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) lam[a][b] = A.lambda(a, b);
  r.lambda_homomorphic = true;
  for (int a = 0; a < n && r.lambda_homomorphic; ++a)
    for (int c = 0; c < n; ++c)
      if (lam[G.mul(a, c)] != compose(lam[a], lam[c])) {
        r.lambda_homomorphic = false;
        break;
      }
  if (source != nullptr) {
    std::vector<char> central(n, 0);
    for (int z : center(G)) central[z] = 1;
    r.center_criterion = true;
    for (int a = 0; a < n && r.center_criterion; ++a)
      for (int c = 0; c < n; ++c) {
        int v = G.mul(G.mul(G.inverse(source->images[G.mul(a, c)]), source->images[a]),
                      source->images[c]);
        if (!central[v]) {
          r.center_criterion = false;
          break;
        }
      }
    if (r.center_criterion != r.lambda_homomorphic)
      throw internal_error("is_lambda_homomorphic: center criterion disagrees");
  }
  // [G, lambda(G)] = { b^{-1} lambda_a(b) } inside ker(lambda)
  r.t1_containment = true;
  for (int a = 0; a < n && r.t1_containment; ++a)
    for (int b = 0; b < n; ++b) {
      int v = G.mul(G.inverse(b), lam[a][b]);
      if (lam[v] != identity_map(n)) {
        r.t1_containment = false;
        break;
      }
    }
  if (r.lambda_homomorphic && !r.t1_containment)
    throw internal_error("is_lambda_homomorphic: t1 containment fails for a homomorphic lambda");
  return r;
}

TwoSidedReport two_sided_cocycle_check(const RbOperator& B) {
  const FiniteGroup& G = *B.group;
  const int n = G.n;
  SkewBrace A = brace_from_rb(B);
  BraceReport br = verify_brace(A);
  TwoSidedReport r;
  r.right_brace = br.right;
  r.right_witness = br.right_witness;
  // psi_g(x) = [B(x)^{-1}, g]
  auto psi = [&](int x, int g) { return G.comm(G.inverse(B.images[x]), g); };
  r.cocycle_law = true;
  for (int c = 0; c < n && r.cocycle_law; ++c) {
    const int ci = G.inverse(c);
    for (int a = 0; a < n && r.cocycle_law; ++a)
      for (int b = 0; b < n; ++b) {
        int lhs = psi(G.mul(a, b), ci);
        int rhs = G.mul(G.conj(psi(a, ci), b), psi(b, ci));
        if (lhs != rhs) {
          r.cocycle_law = false;
          r.cocycle_witness = {a, b, c};
          break;
        }
      }
  }
  if (r.right_brace != r.cocycle_law)
    throw internal_error("two_sided_cocycle_check: criterion sides disagree");
  return r;
}

std::optional<GroupMap> brace_isomorphic(const SkewBrace& A, const SkewBrace& B) {
  if (A.n() != B.n()) return std::nullopt;
  std::optional<GroupMap> base = isomorphic(A.add, B.add);
  if (!base) return std::nullopt;
  // every additive isomorphism is alpha o base for an automorphism alpha
  std::vector<GroupMap> auts = automorphisms(B.add, std::max(B.n(), 24));
  for (const GroupMap& alpha : auts) {
    GroupMap phi = compose(alpha, *base);
    bool ok = true;
    for (int a = 0; a < A.n() && ok; ++a)
      for (int b = 0; b < A.n(); ++b)
        if (phi[A.circ->mul(a, b)] != B.circ->mul(phi[a], phi[b])) {
          ok = false;
          break;
        }
    if (ok) return phi;
  }
  return std::nullopt;
}

SkewBrace semidirect_brace(const GroupPtr& A, const GroupPtr& B,
                           const std::vector<GroupMap>& beta) {
  GroupPtr add = direct_product(A, B);
  GroupPtr semi = semidirect_product(A, B, beta);  // validates beta
  // both use the encoding (a,b) -> a*|B| + b, so the tables line up
  SkewBrace out{add, make_group(add->name + "_circ", semi->table_rows(), add->labels)};
  BraceReport r = verify_brace(out);
  if (!r.left) throw internal_error("semidirect_brace: left axiom fails");
  return out;
}

namespace {

inline long long parity_sign(long long a) { return (a % 2 + 2) % 2 == 0 ? 1 : -1; }
inline long long pcirc(long long a, long long b) { return a + parity_sign(a) * b; }
inline long long pcirc_inv(long long a) { return parity_sign(a + 1) * a; }

struct PPair {
  long long x, y;
  bool operator==(const PPair&) const = default;
};

inline PPair pmul(PPair u, PPair v) {
  long long s = parity_sign(u.x);
  return {u.x + s * v.x, u.y + s * v.y};
}

inline PPair pinv(PPair u) {
  long long s = parity_sign(u.x);
  return {-s * u.x, -s * u.y};
}

inline PPair psplit(PPair u) {  // splitting operator from (x,y) = (y,y)*(y^{o(-1)} o x, 0)
  return pinv({pcirc(pcirc_inv(u.y), u.x), 0});
}

}  // namespace

ParityWindowReport parity_brace_window(int N) {
  if (N < 2) throw invalid_input("parity_brace_window: N must be at least 2");
  ParityWindowReport r;
  r.window = N;
  r.pair_window = std::min(N, 12);
  r.lsbrace = true;
  for (long long a = -N; a <= N && r.lsbrace; ++a)
    for (long long b = -N; b <= N && r.lsbrace; ++b)
      for (long long c = -N; c <= N; ++c)
        if (pcirc(a, b + c) != pcirc(a, b) - a + pcirc(a, c)) {
          r.lsbrace = false;
          break;
        }
  r.circ_inverse = true;
  for (long long a = -N; a <= N; ++a)
    if (pcirc(a, pcirc_inv(a)) != 0 || pcirc(pcirc_inv(a), a) != 0) {
      r.circ_inverse = false;
      break;
    }
  const long long W = r.pair_window;
  r.product_matches_general = true;
  for (long long a = -W; a <= W && r.product_matches_general; ++a)
    for (long long b = -W; b <= W && r.product_matches_general; ++b)
      for (long long c = -W; c <= W && r.product_matches_general; ++c)
        for (long long d = -W; d <= W; ++d) {
          // lambda_a(t) = -a + (a o t) = (-1)^a t
          PPair lhs = pmul({a, b}, {c, d});
          PPair rhs = {pcirc(a, c), b + parity_sign(a) * d};
          if (!(lhs == rhs)) {
            r.product_matches_general = false;
            break;
          }
        }
  r.inverse_formula = true;
  for (long long a = -N; a <= N; ++a) {
    PPair u{a, 0};
    PPair v{pcirc_inv(a), 0};  // ((-1)^{a+1} a, 0)
    if (!(pmul(u, v) == PPair{0, 0}) || !(pmul(v, u) == PPair{0, 0})) {
      r.inverse_formula = false;
      break;
    }
  }
  r.decomposition = true;
  for (long long x = -N; x <= N && r.decomposition; ++x)
    for (long long y = -N; y <= N; ++y) {
      PPair h{y, y};
      PPair l{parity_sign(y + 1) * (y - x), 0};
      if (!(pmul(h, l) == PPair{x, y})) {
        r.decomposition = false;
        break;
      }
    }
  r.rb_identity = true;
  for (long long a = -W; a <= W && r.rb_identity; ++a)
    for (long long b = -W; b <= W && r.rb_identity; ++b)
      for (long long c = -W; c <= W && r.rb_identity; ++c)
        for (long long d = -W; d <= W; ++d) {
          PPair u{a, b}, v{c, d};
          PPair bu = psplit(u);
          PPair lhs = pmul(bu, psplit(v));
          PPair rhs = psplit(pmul(pmul(pmul(u, bu), v), pinv(bu)));
          if (!(lhs == rhs)) {
            r.rb_identity = false;
            break;
          }
        }
  r.closed_form = true;
  r.sign_variant_form = true;
  for (long long g = -N; g <= N; ++g)
    for (long long h = -N; h <= N; ++h) {
      PPair b = psplit({g, h});
      PPair expect{parity_sign(g) * (h - g), 0};
      PPair variant{parity_sign(g + 1) * (h - g), 0};
      if (!(b == expect)) r.closed_form = false;
      if (!(b == variant) && r.sign_variant_form) {
        r.sign_variant_form = false;
        r.sign_variant_witness = {g, h};
      }
    }
  PPair spot = psplit({2, 5});
  r.spot_value = {spot.x, spot.y};
  r.embedding_add = true;
  r.embedding_circ = true;
  for (long long g = -N; g <= N; ++g)
    for (long long h = -N; h <= N; ++h) {
      PPair pg{0, g}, ph{0, h};
      if (!(pmul(pg, ph) == PPair{0, g + h})) r.embedding_add = false;
      PPair bg = psplit(pg);
      PPair circ = pmul(pmul(pmul(pg, bg), ph), pinv(bg));
      if (!(circ == PPair{0, pcirc(g, h)})) r.embedding_circ = false;
    }
  return r;
}

}  // namespace braceforge
