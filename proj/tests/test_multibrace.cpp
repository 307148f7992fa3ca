#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braceforge/catalog.hpp"
#include "braceforge/multibrace.hpp"
#include "braceforge/skew_brace.hpp"

using namespace braceforge;

namespace {

RbOperator s3_b1() {
  GroupPtr s3 = symmetric3_presented();
  return splitting_rb(s3, subgroup_closure(s3, {s3->element("s2")}),
                      subgroup_closure(s3, {s3->element("s1s2")}));
}

}  // namespace

TEST_CASE("a 1-level tower coincides with the skew brace axiom") {
  RbOperator b1 = s3_b1();
  MultiBrace M = build_multibrace(b1, 1);
  SkewBrace A = brace_from_rb(b1);
  CHECK(M.tables[0] == A.add->table_rows());
  CHECK(M.tables[1] == A.circ->table_rows());
  MultibraceReport r = verify_multibrace(M);
  CHECK(r.ok());
}

TEST_CASE("a constant tower passes every level") {
  GroupPtr g = dihedral_group(4);
  MultiBrace M;
  M.n = g->n;
  for (int i = 0; i < 3; ++i) M.tables.push_back(g->table_rows());
  CHECK(verify_multibrace(M).ok());
}

TEST_CASE("B0 gives a constant tower") {
  GroupPtr s3 = symmetric3_presented();
  MultiBrace M = build_multibrace(rb_zero(s3), 3);
  for (const auto& t : M.tables) CHECK(t == s3->table_rows());
}

TEST_CASE("the S3 tower stabilizes after the abelian level") {
  MultiBrace M = build_multibrace(s3_b1(), 2);
  CHECK(M.tables[2] == M.tables[1]);
  CHECK(M.tables[1] != M.tables[0]);
}

TEST_CASE("abelian levels freeze the tower") {
  for (const auto& name : {"S3", "Q8"}) {
    GroupPtr g = builtin_catalog().find(name);
    for (const RbOperator& B : enumerate_rb_operators(g)) {
      MultiBrace M = build_multibrace(B, 3);
      for (int i = 0; i + 1 < static_cast<int>(M.tables.size()); ++i) {
        GroupPtr level = make_group("l", M.tables[i], {});
        if (level->is_abelian()) CHECK(M.tables[i + 1] == M.tables[i]);
      }
    }
  }
}

TEST_CASE("inversion operator tower on S3 verifies at k = 3") {
  GroupPtr s3 = symmetric3_presented();
  MultiBrace M = build_multibrace(rb_inverse(s3), 3);
  CHECK(M.k() == 3);
  CHECK(verify_multibrace(M).ok());
}

TEST_CASE("broken towers are reported with witnesses") {
  // additive S3 with circle C6 in this labeling is not a brace: the induced
  // lambda map sends an involution to a 3-cycle, so it cannot be an additive
  // automorphism and the axiom must fail
  MultiBrace M;
  M.n = 6;
  M.tables.push_back(symmetric3_presented()->table_rows());
  M.tables.push_back(cyclic_group(6)->table_rows());
  MultibraceReport r = verify_multibrace(M);
  CHECK(r.group_ok[0]);
  CHECK(r.group_ok[1]);
  CHECK_FALSE(r.axiom_ok[0]);
  CHECK(r.witness[0] == 1);

  MultiBrace bad;
  bad.n = 2;
  bad.tables = {{{0, 1}, {1, 0}}, {{0, 1}, {1, 1}}};
  MultibraceReport r2 = verify_multibrace(bad);
  CHECK_FALSE(r2.group_ok[1]);
}

TEST_CASE("k is capped") {
  CHECK_THROWS_AS((void)build_multibrace(rb_zero(cyclic_group(2)), 5), bound_exceeded);
  CHECK_THROWS_AS((void)build_multibrace(rb_zero(cyclic_group(2)), 0), bound_exceeded);
}
