#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/catalog.hpp"
#include "braceforge/embedding.hpp"

using namespace braceforge;

namespace {

RbOperator s3_b1() {
  GroupPtr s3 = symmetric3_presented();
  return splitting_rb(s3, subgroup_closure(s3, {s3->element("s2")}),
                      subgroup_closure(s3, {s3->element("s1s2")}));
}

}  // namespace

TEST_CASE("tilde group of a trivial brace is the direct square") {
  GroupPtr g = symmetric3_presented();
  TildeGroup T = build_tilde(trivial_brace(g));
  CHECK(T.tilde->n == 36);
  CHECK(T.tilde->tab == direct_product(g, g)->tab);
}

TEST_CASE("tilde group of S3(B1) factors exactly") {
  SkewBrace A = brace_from_rb(s3_b1());
  TildeGroup T = build_tilde(A);
  CHECK(T.tilde->n == 36);
  CHECK(T.diag.order() == 6);
  CHECK(T.axis.order() == 6);
  // H meet L = {(e,e)}
  for (int m : T.diag.members)
    if (m != 0) CHECK_FALSE(T.axis.contains(m));
  // the splitting operator is a weight-1 RB operator on the tilde group
  CHECK(is_rb_operator(*T.tilde, T.splitting.images, 1).ok);
}

TEST_CASE("embedding checks pass for assorted braces") {
  GroupPtr s3 = symmetric3_presented();
  CHECK_NOTHROW((void)verify_embedding(trivial_brace(cyclic_group(2))));
  CHECK_NOTHROW((void)verify_embedding(brace_from_rb(s3_b1())));
  CHECK_NOTHROW((void)verify_embedding(opposite_brace(s3)));
  EmbeddingReport r = verify_embedding(trivial_brace(cyclic_group(5)));
  CHECK(r.add_homomorphism);
  CHECK(r.circ_homomorphism);
  CHECK(r.injective);
  CHECK(r.star_commutator);
}

TEST_CASE("tilde bound") {
  CHECK_THROWS_AS((void)build_tilde(trivial_brace(builtin_catalog().find("C2xS3"))),
                  bound_exceeded);
}

TEST_CASE("zeta series on trivial braces") {
  // abelian: zeta_1 is everything
  ZetaReport ab = zeta_series(trivial_brace(cyclic_group(6)));
  CHECK(ab.strong_left_nilpotent);
  CHECK(ab.series.size() == 1);
  CHECK(ab.series[0].size() == 6);

  // nilpotent: the series equals the upper central series of the group
  ZetaReport q8 = zeta_series(trivial_brace(quaternion_group()));
  CHECK(q8.strong_left_nilpotent);
  REQUIRE(q8.series.size() == 2);
  CHECK(q8.series[0] == center(*quaternion_group()));
  CHECK(q8.series[1].size() == 8);

  ZetaReport d4 = zeta_series(trivial_brace(dihedral_group(4)));
  CHECK(d4.strong_left_nilpotent);
  CHECK(d4.series[0] == center(*dihedral_group(4)));

  // centerless: stabilizes at {e}
  ZetaReport s3 = zeta_series(trivial_brace(symmetric3_presented()));
  CHECK_FALSE(s3.strong_left_nilpotent);
  CHECK(s3.series.back().size() == 1);
  CHECK(s3.series_strong_left_ideals);
}

TEST_CASE("zeta series consequences on RB braces of C2xC4") {
  GroupPtr g = builtin_catalog().find("C2xC4");
  for (const RbOperator& B : enumerate_rb_operators(g)) {
    ZetaReport r = zeta_series(brace_from_rb(B));
    if (r.strong_left_nilpotent) {
      CHECK(r.implies_left_star_nilpotent);
      CHECK(r.implies_additive_nilpotent);
      CHECK(r.ideals_meet_left_center);
    }
  }
}

TEST_CASE("strong left ideal iff psi-image normal in the tilde group") {
  std::vector<SkewBrace> braces;
  GroupPtr s3 = symmetric3_presented();
  braces.push_back(trivial_brace(s3));
  braces.push_back(opposite_brace(s3));
  for (const RbOperator& B : enumerate_rb_operators(s3))
    braces.push_back(brace_from_rb(B));
  braces.push_back(trivial_brace(cyclic_group(6)));
  for (const SkewBrace& A : enumerate_braces(cyclic_group(6)))
    braces.push_back(A);
  for (const SkewBrace& A : braces) {
    TildeGroup T = build_tilde(A);
    for (const Subgroup& S : all_subgroups(A.add)) {
      Subgroup psi_image{T.tilde, S.members};  // encode(0,i) = i
      CHECK(is_strong_left_ideal(A, S.members) ==
            (is_subgroup(*T.tilde, psi_image.members) && is_normal(psi_image)));
    }
  }
}

TEST_CASE("recovery over the complete group S3") {
  GroupPtr s3 = symmetric3_presented();
  RbOperator b1 = s3_b1();
  SkewBrace A = brace_from_rb(b1);
  RbOperator rec = recover_rb_complete(A);
  CHECK(rec.images == b1.images);

  // trivial brace recovers B0
  RbOperator rec0 = recover_rb_complete(trivial_brace(s3));
  CHECK(rec0.images == GroupMap(6, 0));

  // every brace on S3 round-trips
  for (const SkewBrace& B : enumerate_braces(s3)) {
    RbOperator r = recover_rb_complete(B);
    SkewBrace round = brace_from_rb(r);
    CHECK(round.circ->tab == B.circ->tab);
  }

  // recovery composed with brace_from_rb is the identity on operators
  for (const RbOperator& B : enumerate_rb_operators(s3))
    CHECK(recover_rb_complete(brace_from_rb(B)).images == B.images);
}

TEST_CASE("recovery requires a complete additive group") {
  CHECK_THROWS_AS((void)recover_rb_complete(trivial_brace(cyclic_group(4))),
                  invalid_input);
}
