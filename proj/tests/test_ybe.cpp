#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braceforge/catalog.hpp"
#include "braceforge/ybe.hpp"

using namespace braceforge;

namespace {

YbeSolution shift_solution(int n) {
  // S(x,y) = (y+1 mod n, x)
  YbeSolution S;
  S.n = n;
  S.sig.resize(static_cast<size_t>(n) * n);
  S.tau.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      S.sig[x * n + y] = (y + 1) % n;
      S.tau[x * n + y] = x;
    }
  return S;
}

}  // namespace

TEST_CASE("flip is an involutive solution") {
  SolutionReport r = verify_solution(flip_solution(5));
  CHECK(r.solution());
  CHECK(r.nondegenerate);
  CHECK(r.involutive);
}

TEST_CASE("the cyclic shift map is a non-involutive solution") {
  for (int n : {2, 3, 6}) {
    SolutionReport r = verify_solution(shift_solution(n));
    CHECK(r.solution());
    CHECK(r.nondegenerate);
    CHECK_FALSE(r.involutive);
  }
}

TEST_CASE("solution from the trivial brace is (b, a^b)") {
  GroupPtr s3 = symmetric3_presented();
  YbeSolution S = solution_from_brace(trivial_brace(s3));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(S.sigma(a, b) == b);
      CHECK(S.tau_of(a, b) == s3->conj(a, b));
    }
  SolutionReport r = verify_solution(S);
  CHECK(r.solution());
  CHECK_FALSE(r.involutive);  // S3 is non-abelian
}

TEST_CASE("solution from a trivial brace on an abelian group is the flip") {
  GroupPtr c5 = cyclic_group(5);
  YbeSolution S = solution_from_brace(trivial_brace(c5));
  CHECK(S.sig == flip_solution(5).sig);
  CHECK(S.tau == flip_solution(5).tau);
}

TEST_CASE("rb-route and brace-route solutions coincide") {
  GroupPtr s3 = symmetric3_presented();
  for (const RbOperator& B : enumerate_rb_operators(s3)) {
    YbeSolution S = solution_from_rb(B);  // internal equality assertion
    CHECK(verify_solution(S).solution());
  }
  YbeSolution S0 = solution_from_rb(rb_zero(s3));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(S0.sigma(a, b) == b);
      CHECK(S0.tau_of(a, b) == s3->conj(a, b));
    }
}

TEST_CASE("involutivity iff the additive group is abelian") {
  for (const auto& name : {"S3", "C6", "Q8", "C2xC2"}) {
    GroupPtr g = builtin_catalog().find(name);
    for (const RbOperator& B : enumerate_rb_operators(g)) {
      YbeSolution S = solution_from_rb(B);
      CHECK(verify_solution(S).involutive == g->is_abelian());
    }
  }
}

TEST_CASE("conjugation by the identity and by P") {
  YbeSolution S = solution_from_brace(trivial_brace(symmetric3_presented()));
  PairMap id(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) id[x * 6 + y] = {x, y};
  ConjugatedSolution c = conjugate_solution(S, id);
  CHECK(c.sol.sig == S.sig);
  CHECK(c.sol.tau == S.tau);
  CHECK(c.report.solution());

  // PSP(x,y) = (tau_x(y), x) for a rack-type solution
  PairMap p(36);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) p[x * 6 + y] = {y, x};
  ConjugatedSolution psp = conjugate_solution(S, p);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(psp.sol.sigma(x, y) == S.tau_of(y, x));
      CHECK(psp.sol.tau_of(x, y) == x);
    }
  CHECK(psp.report.solution());

  PairMap bad(36, {0, 0});
  CHECK_THROWS_AS((void)conjugate_solution(S, bad), invalid_input);
}

TEST_CASE("rack form of the trivial-brace solution is the conjugation quandle") {
  GroupPtr s3 = symmetric3_presented();
  YbeSolution S = solution_from_brace(trivial_brace(s3));
  RackFormResult r = rack_form(S);
  CHECK(r.report.solution());
  CHECK(r.cond_unique);
  CHECK(r.rack_report.rack());
  CHECK(r.rack_report.quandle);
  CHECK(r.rack.table == conj_quandle(s3).rack.table);
  // sigma of the conjugated solution is the identity
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) CHECK(r.conjugated.sigma(x, y) == y);
}

TEST_CASE("rack form of the flip is the flip over the trivial quandle") {
  RackFormResult r = rack_form(flip_solution(4));
  CHECK(r.cond_unique);
  CHECK(r.rack_report.quandle);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(r.rack.table[x][y] == x);
}

TEST_CASE("rack form of the shift solution") {
  for (int n = 2; n <= 12; ++n) {
    RackFormResult r = rack_form(shift_solution(n));
    CHECK(r.report.solution());
    CHECK(r.cond_unique);
    CHECK(r.rack_report.rack());
    CHECK_FALSE(r.rack_report.quandle);
  }
}

TEST_CASE("rack form of brace solutions has identity sigma and passes") {
  for (const SkewBrace& A : enumerate_braces(symmetric3_presented())) {
    YbeSolution S = solution_from_brace(A);
    RackFormResult r = rack_form(S);
    CHECK(r.report.solution());
    for (int x = 0; x < S.n; ++x)
      for (int y = 0; y < S.n; ++y) CHECK(r.conjugated.sigma(x, y) == y);
  }
}

TEST_CASE("rack and quandle axioms") {
  // trivial quandle
  std::vector<std::vector<int>> triv(4, std::vector<int>(4));
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) triv[x][y] = x;
  RackReport t = rack_quandle_check(triv);
  CHECK(t.rack());
  CHECK(t.quandle);

  // conjugation quandle with inner relation
  ConjQuandle cq = conj_quandle(symmetric3_presented());
  CHECK(cq.inner_relation);

  // y * x = y + 1: a rack but not a quandle
  for (int n : {3, 5}) {
    std::vector<std::vector<int>> shift(n, std::vector<int>(n));
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x) shift[y][x] = (y + 1) % n;
    RackReport r = rack_quandle_check(shift);
    CHECK(r.rack());
    CHECK_FALSE(r.quandle);
    CHECK(r.quandle_witness >= 0);
  }
}

TEST_CASE("solutions from racks") {
  // trivial quandle -> flip
  std::vector<std::vector<int>> triv(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) triv[x][y] = x;
  YbeSolution S = solution_from_rack(triv);
  CHECK(S.sig == flip_solution(3).sig);
  CHECK(S.tau == flip_solution(3).tau);

  // conjugation quandle of S3 gives the verified solution (y, x^y)
  GroupPtr s3 = symmetric3_presented();
  YbeSolution Sc = solution_from_rack(conj_quandle(s3).rack.table);
  CHECK(verify_solution(Sc).solution());

  // an r2-violating table breaks the braid relation
  std::vector<std::vector<int>> bad(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) bad[x][y] = y == 0 ? (x + 1) % 3 : x;
  RackReport br = rack_quandle_check(bad);
  CHECK(br.r1);
  CHECK_FALSE(br.r2);
  SolutionReport sr = verify_solution(solution_from_rack(bad));
  CHECK_FALSE(sr.braid);
  CHECK(sr.braid_witness[0] >= 0);
}

TEST_CASE("braid law holds iff the table is a rack: exhaustive orders 2 and 3") {
  for (int n : {2, 3}) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n, 0));
    long long total = 1;
    for (int i = 0; i < n * n; ++i) total *= n;
    for (long long code = 0; code < total; ++code) {
      long long c = code;
      for (int i = 0; i < n * n; ++i) {
        table[i / n][i % n] = static_cast<int>(c % n);
        c /= n;
      }
      RackReport rr = rack_quandle_check(table);
      SolutionReport sr = verify_solution(solution_from_rack(table));
      bool nondeg_solution = sr.solution() && sr.nondegenerate;
      CHECK(nondeg_solution == rr.rack());
    }
  }
}

TEST_CASE("braid law iff rack axioms: sampled order 4") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<std::vector<int>> table(4, std::vector<int>(4));
  for (int trial = 0; trial < 4000; ++trial) {
    for (auto& row : table)
      for (int& v : row) v = d(rng);
    RackReport rr = rack_quandle_check(table);
    SolutionReport sr = verify_solution(solution_from_rack(table));
    CHECK((sr.solution() && sr.nondegenerate) == rr.rack());
  }
}

TEST_CASE("direct rb solution") {
  GroupPtr s3 = symmetric3_presented();
  DirectRbResult z = direct_rb_solution(rb_zero(s3));
  CHECK(z.identity);
  CHECK(z.report.solution());
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      CHECK(z.sol.sigma(x, y) == y);
      CHECK(z.sol.tau_of(x, y) == x);
    }
  for (const auto& name : {"S3", "D4", "Q8", "C6"}) {
    for (const RbOperator& B : enumerate_rb_operators(builtin_catalog().find(name)))
      (void)direct_rb_solution(B);  // internal iff assertion
  }
}

TEST_CASE("rack-type brace solutions come from trivial braces") {
  for (const auto& name : {"S3", "C6", "C2xC2"}) {
    GroupPtr g = builtin_catalog().find(name);
    for (const SkewBrace& A : enumerate_braces(g)) {
      YbeSolution S = solution_from_brace(A);
      if (is_rack_type(S)) CHECK(verify_brace(A).trivial);
    }
  }
}
