#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "braceforge/catalog.hpp"
#include "braceforge/skew_brace.hpp"

using namespace braceforge;

namespace {

RbOperator s3_b1() {
  GroupPtr s3 = symmetric3_presented();
  return splitting_rb(s3, subgroup_closure(s3, {s3->element("s2")}),
                      subgroup_closure(s3, {s3->element("s1s2")}));
}

RbOperator s3_b2() {
  GroupPtr s3 = symmetric3_presented();
  int s1 = s3->element("s1");
  GroupMap f(6, 0);
  for (int g : {s1, s3->element("s2"), s3->element("s1s2s1")}) f[g] = s1;
  return hom_rb(s3, f);
}

}  // namespace

TEST_CASE("trivial braces") {
  GroupPtr s3 = symmetric3_presented();
  BraceReport tr = verify_brace(trivial_brace(s3));
  CHECK(tr.left);
  CHECK(tr.right);
  CHECK(tr.two_sided);
  CHECK(tr.trivial);
  CHECK(tr.trivial_kind == "equal");
  CHECK_FALSE(tr.rump_brace);

  BraceReport op = verify_brace(opposite_brace(s3));
  CHECK(op.left);
  CHECK(op.trivial);
  CHECK(op.trivial_kind == "opposite");

  BraceReport ab = verify_brace(trivial_brace(cyclic_group(4)));
  CHECK(ab.trivial_kind == "equal+opposite");
  CHECK(ab.rump_brace);
}

TEST_CASE("braces from the basic operators") {
  GroupPtr s3 = symmetric3_presented();
  SkewBrace b0 = brace_from_rb(rb_zero(s3));
  CHECK(b0.circ->tab == s3->tab);
  SkewBrace bm1 = brace_from_rb(rb_inverse(s3));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(bm1.circ->mul(x, y) == s3->mul(y, x));

  SkewBrace b1 = brace_from_rb(s3_b1());
  BraceReport r = verify_brace(b1);
  CHECK(r.left);
  CHECK_FALSE(r.trivial);
  CHECK_FALSE(r.rump_brace);  // additive S3 is non-abelian
  CHECK(isomorphic(b1.circ, cyclic_group(6)).has_value());
}

TEST_CASE("weight -1 brace on an abelian group is trivial") {
  GroupPtr c6 = cyclic_group(6);
  RbOperator c = transform_rb(rb_inverse(c6), RbTransform::weight_swap);
  REQUIRE(c.weight == -1);
  SkewBrace A = brace_from_rb_neg1(c);
  CHECK(verify_brace(A).trivial);
}

TEST_CASE("weight -1 brace formula on S3") {
  GroupPtr s3 = symmetric3_presented();
  for (const RbOperator& B : enumerate_rb_operators(s3)) {
    RbOperator C = transform_rb(B, RbTransform::weight_swap);
    SkewBrace A = brace_from_rb_neg1(C);
    CHECK(verify_brace(A).left);
  }
}

TEST_CASE("lambda analysis") {
  GroupPtr s3 = symmetric3_presented();
  LambdaReport triv = lambda_analysis(trivial_brace(s3));
  for (int a = 0; a < 6; ++a) CHECK(triv.lambda[a] == identity_map(6));

  RbOperator b1 = s3_b1();
  SkewBrace A = brace_from_rb(b1);
  LambdaReport lr = lambda_analysis(A, &b1);
  CHECK(lr.automorphisms);
  CHECK(lr.circ_homomorphism);
  CHECK(lr.inverse_formula);
  CHECK(lr.rb_conjugation);
  int s1 = s3->element("s1");
  for (int b = 0; b < 6; ++b) {
    int bs1 = b1.images[s1];
    CHECK(lr.lambda[s1][b] == s3->mul(s3->mul(bs1, b), s3->inverse(bs1)));
  }

  // opposite brace: lambda_a(b) = a^{-1} b a
  LambdaReport op = lambda_analysis(opposite_brace(s3));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      CHECK(op.lambda[a][b] == s3->mul(s3->mul(s3->inverse(a), b), a));
}

TEST_CASE("braces from regular subgroups") {
  GroupPtr s3 = symmetric3_presented();
  HolomorphGroup hol = holomorph(s3);
  std::vector<Subgroup> regs = regular_subgroups(hol);
  REQUIRE(regs.size() == 8);  // derived golden value
  int mult_s3 = 0, mult_c6 = 0;
  for (const Subgroup& H : regs) {
    SkewBrace A = brace_from_regular_subgroup(hol, H);
    CHECK(verify_brace(A).left);
    if (isomorphic(A.circ, cyclic_group(6)).has_value()) ++mult_c6;
    if (isomorphic(A.circ, s3).has_value()) ++mult_s3;
    // the graph {(lambda_a, a)} reconstructs a regular subgroup giving A back
    LambdaReport lr = lambda_analysis(A);
    std::vector<int> graph;
    for (int a = 0; a < A.n(); ++a) {
      auto it = std::lower_bound(hol.auts.begin(), hol.auts.end(), lr.lambda[a]);
      REQUIRE(it != hol.auts.end());
      REQUIRE(*it == lr.lambda[a]);
      graph.push_back(hol.encode(static_cast<int>(it - hol.auts.begin()), a));
    }
    std::sort(graph.begin(), graph.end());
    CHECK(is_subgroup(*hol.hol, graph));
    Subgroup Hg{hol.hol, graph};
    SkewBrace again = brace_from_regular_subgroup(hol, Hg);
    CHECK(again.circ->tab == A.circ->tab);
  }
  CHECK(mult_c6 == 6);
  CHECK(mult_s3 == 2);
}

TEST_CASE("translation subgroup gives the trivial brace") {
  GroupPtr g = cyclic_group(5);
  HolomorphGroup hol = holomorph(g);
  Subgroup trans{hol.hol, {0, 1, 2, 3, 4}};
  REQUIRE(is_subgroup(*hol.hol, trans.members));
  SkewBrace A = brace_from_regular_subgroup(hol, trans);
  CHECK(verify_brace(A).trivial_kind == "equal+opposite");
}

TEST_CASE("enumerate braces with and without dedup") {
  CHECK(enumerate_braces(cyclic_group(2)).size() == 1);
  CHECK(enumerate_braces(cyclic_group(3)).size() == 1);
  CHECK(verify_brace(enumerate_braces(cyclic_group(3))[0]).trivial);
  CHECK(enumerate_braces(symmetric3_presented()).size() == 8);
  CHECK(enumerate_braces(symmetric3_presented(), 8, 400, true).size() == 4);
  CHECK(enumerate_braces(cyclic_group(6), 8, 400, true).size() == 2);
}

TEST_CASE("star table and left series") {
  GroupPtr s3 = symmetric3_presented();
  StarSeries triv = star_and_series(trivial_brace(s3));
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) CHECK(triv.star[g][h] == 0);
  CHECK(triv.left_star_nilpotent);
  CHECK(triv.series.size() == 2);  // G then {e}

  RbOperator b1 = s3_b1();
  StarSeries s1 = star_and_series(brace_from_rb(b1), &b1);
  CHECK(s1.rb_commutator_form);

  StarSeries op = star_and_series(opposite_brace(s3));
  // g*h = g^{-1}(h g)h^{-1}; the series stabilizes at A3, so not nilpotent
  CHECK_FALSE(op.left_star_nilpotent);
  CHECK(op.series.back().size() == 3);
}

TEST_CASE("invariant subsets on RB braces match the closed forms") {
  for (const auto& name : {"S3", "Q8", "C2xC4"}) {
    GroupPtr g = builtin_catalog().find(name);
    std::vector<int> zg = center(*g);
    std::vector<char> central(g->n, 0);
    for (int z : zg) central[z] = 1;
    for (const RbOperator& B : enumerate_rb_operators(g)) {
      SkewBrace A = brace_from_rb(B);
      InvariantSubsets inv = invariant_subsets(A);
      CHECK(inv.left_center.members == zg);  // Z_l(G(B)) = Z(G)
      std::vector<int> soc;
      for (int a : zg)
        if (central[B.images[a]]) soc.push_back(a);
      CHECK(inv.socle.members == soc);  // Soc = Z meet B^{-1}[Z]
      std::vector<int> ann;
      std::set_intersection(soc.begin(), soc.end(), inv.left_center.members.begin(),
                            inv.left_center.members.end(), std::back_inserter(ann));
      CHECK(inv.annihilator.members == ann);
    }
  }
}

TEST_CASE("trivial brace on an abelian group has everything central") {
  GroupPtr c6 = cyclic_group(6);
  InvariantSubsets inv = invariant_subsets(trivial_brace(c6));
  CHECK(inv.socle.order() == 6);
  CHECK(inv.left_center.order() == 6);
  CHECK(inv.annihilator.order() == 6);
}

TEST_CASE("ideal predicates and quotient") {
  GroupPtr s3 = symmetric3_presented();
  SkewBrace A = brace_from_rb(s3_b1());
  std::vector<int> a3 = subgroup_closure(s3, {s3->element("s1s2")}).members;
  CHECK(is_left_ideal(A, a3));
  CHECK(is_strong_left_ideal(A, a3));
  CHECK(is_ideal(A, a3));
  SkewBrace Q = quotient_brace(A, a3);
  CHECK(Q.n() == 2);
  CHECK(verify_brace(Q).left);

  std::vector<int> c2 = subgroup_closure(s3, {s3->element("s2")}).members;
  CHECK_FALSE(is_ideal(A, c2));
  CHECK_THROWS_AS((void)quotient_brace(A, c2), invalid_input);

  // RB criteria: ideal iff normal in both, left ideal iff normalized by Im(B)
  for (const RbOperator& B : enumerate_rb_operators(s3)) {
    SkewBrace G = brace_from_rb(B);
    for (const Subgroup& S : all_subgroups(s3)) {
      Subgroup in_add{G.add, S.members}, in_circ{G.circ, S.members};
      bool ideal_def = is_ideal(G, S.members);
      bool ideal_rb = is_normal(in_add) && is_subgroup(*G.circ, S.members) &&
                      is_normal(in_circ);
      CHECK(ideal_def == ideal_rb);
      bool li_def = is_left_ideal(G, S.members);
      bool li_rb = true;
      for (int a = 0; a < 6 && li_rb; ++a)
        for (int i : S.members) {
          int c = s3->mul(s3->mul(B.images[a], i), s3->inverse(B.images[a]));
          if (!S.contains(c)) {
            li_rb = false;
            break;
          }
        }
      CHECK(li_def == li_rb);
    }
  }
}

TEST_CASE("lambda homomorphic checks") {
  GroupPtr s3 = symmetric3_presented();
  CHECK(is_lambda_homomorphic(trivial_brace(s3)).lambda_homomorphic);
  RbOperator b0 = rb_zero(s3);
  SkewBrace A0 = brace_from_rb(b0);
  LambdaHomReport r0 = is_lambda_homomorphic(A0, &b0);
  CHECK(r0.lambda_homomorphic);
  CHECK(r0.center_criterion);
  // the agreement with the center criterion is asserted internally
  for (const auto& name : {"S3", "D4", "Q8", "C2xC2"}) {
    GroupPtr g = builtin_catalog().find(name);
    for (const RbOperator& B : enumerate_rb_operators(g)) {
      SkewBrace A = brace_from_rb(B);
      (void)is_lambda_homomorphic(A, &B);
    }
  }
}

TEST_CASE("two sided brace iff cocycle law") {
  GroupPtr c6 = cyclic_group(6);
  TwoSidedReport ab = two_sided_cocycle_check(rb_zero(c6));
  CHECK(ab.right_brace);
  CHECK(ab.cocycle_law);
  GroupPtr s3 = symmetric3_presented();
  TwoSidedReport inv = two_sided_cocycle_check(rb_inverse(s3));
  CHECK(inv.right_brace == inv.cocycle_law);
  for (const auto& name : {"S3", "D4", "Q8"}) {
    for (const RbOperator& B : enumerate_rb_operators(builtin_catalog().find(name)))
      (void)two_sided_cocycle_check(B);  // internal agreement assertion
  }
}

TEST_CASE("brace isomorphism search") {
  GroupPtr s3 = symmetric3_presented();
  SkewBrace A = brace_from_rb(s3_b1());
  // a relabeled copy of A is found isomorphic
  CHECK(brace_isomorphic(A, A).has_value());

  // the splitting and homomorphism braces are not isomorphic: any brace
  // isomorphism over a centerless additive group intertwines the operators,
  // impossible since the images have sizes 3 and 2
  SkewBrace B = brace_from_rb(s3_b2());
  CHECK_FALSE(brace_isomorphic(A, B).has_value());

  // aut-conjugate operators do give isomorphic braces
  std::vector<GroupMap> auts = automorphisms(s3);
  int moved = 0;
  for (const GroupMap& phi : auts) {
    RbOperator bphi = transform_rb(s3_b1(), RbTransform::aut_conj, &phi);
    if (bphi.images != s3_b1().images) {
      ++moved;
      CHECK(brace_isomorphic(A, brace_from_rb(bphi)).has_value());
    }
  }
  CHECK(moved == 4);

  // trivial vs opposite on S3: multiplicative groups are isomorphic but no
  // bijection preserves both products
  CHECK_FALSE(brace_isomorphic(trivial_brace(s3), opposite_brace(s3)).has_value());
}

TEST_CASE("semidirect brace: Colazzo example") {
  GroupPtr a = cyclic_group(3), b = cyclic_group(2);
  SkewBrace G = semidirect_brace(a, b, {identity_map(3), GroupMap{0, 2, 1}});
  CHECK(isomorphic(G.add, cyclic_group(6)).has_value());
  CHECK(isomorphic(G.circ, symmetric3_presented()).has_value());
  InvariantSubsets inv = invariant_subsets(G);
  // Z_l = {e} x B under the encoding (a,b) -> a*2 + b
  CHECK(inv.left_center.members == std::vector<int>{0, 1});
  Subgroup zl_circ{G.circ, inv.left_center.members};
  CHECK_FALSE(is_normal(zl_circ));
  CHECK_FALSE(is_ideal(G, inv.left_center.members));
  CHECK(is_strong_left_ideal(G, inv.left_center.members));
}

TEST_CASE("semidirect brace: trivial action and order-3 action") {
  SkewBrace triv = semidirect_brace(cyclic_group(3), cyclic_group(2),
                                    {identity_map(3), identity_map(3)});
  CHECK(verify_brace(triv).trivial);

  // beta of order 3 on C2xC2 cycling the involutions
  GroupPtr v4 = builtin_catalog().find("C2xC2");
  GroupMap rot{0, 2, 3, 1};
  REQUIRE(is_homomorphism(*v4, *v4, rot));
  SkewBrace G = semidirect_brace(v4, cyclic_group(3),
                                 {identity_map(4), rot, compose(rot, rot)});
  CHECK(verify_brace(G).left);
  CHECK(isomorphic(G.circ, builtin_catalog().find("A4")).has_value());

  CHECK_THROWS_AS(
      (void)semidirect_brace(cyclic_group(3), cyclic_group(2),
                             {identity_map(3), GroupMap{0, 0, 0}}),
      invalid_input);
}

TEST_CASE("parity brace window") {
  ParityWindowReport r = parity_brace_window(12);
  CHECK(r.lsbrace);
  CHECK(r.circ_inverse);
  CHECK(r.product_matches_general);
  CHECK(r.inverse_formula);
  CHECK(r.decomposition);
  CHECK(r.rb_identity);
  CHECK(r.closed_form);
  CHECK(r.spot_value == std::array<long long, 2>{3, 0});
  // the (-1)^{g+1} sign variant disagrees with the construction
  CHECK_FALSE(r.sign_variant_form);
  CHECK(r.embedding_add);
  CHECK(r.embedding_circ);
  // spot formula values: 3 o 4 = -1, 0 o b = b
  CHECK_THROWS_AS((void)parity_brace_window(1), invalid_input);
}

TEST_CASE("brace json-level equality sanity for quotient labels") {
  GroupPtr s3 = symmetric3_presented();
  SkewBrace A = brace_from_rb(s3_b1());
  std::vector<int> a3 = subgroup_closure(s3, {s3->element("s1s2")}).members;
  SkewBrace Q = quotient_brace(A, a3);
  CHECK(Q.labels()[0] == "[e]");
}
