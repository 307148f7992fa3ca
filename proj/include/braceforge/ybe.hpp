#ifndef BRACEFORGE_YBE_HPP
#define BRACEFORGE_YBE_HPP

#include "braceforge/skew_brace.hpp"

namespace braceforge {

/// Set-theoretic map S(x,y) = (sigma_x(y), tau_y(x)) on {0..n-1}^2.
struct YbeSolution {
  int n = 0;
  std::vector<int> sig;  // sig[x*n+y] = sigma_x(y)
  std::vector<int> tau;  // tau[x*n+y] = tau_y(x)

  int sigma(int x, int y) const { return sig[x * n + y]; }
  int tau_of(int x, int y) const { return tau[x * n + y]; }
  std::array<int, 2> apply(int x, int y) const { return {sigma(x, y), tau_of(x, y)}; }
};

struct SolutionReport {
  bool bijective = false;
  bool braid = false;
  std::array<int, 3> braid_witness{-1, -1, -1};
  bool nondegenerate = false;
  bool left_nondegenerate = false;
  bool involutive = false;
  std::array<int, 2> involutive_witness{-1, -1};

  bool solution() const { return bijective && braid; }
};

SolutionReport verify_solution(const YbeSolution& S);

/// The flip P(x,y) = (y,x).
YbeSolution flip_solution(int n);

/// S(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}((a o b)^{-1} a (a o b))).
/// Verified non-degenerate solution; failure throws internal_error.
YbeSolution solution_from_brace(const SkewBrace& A);

/// S(a,b) = (lambda_a(b), a^{lambda_a(b) B(lambda_a(b))}) with
/// lambda_a(b) = B(a) b B(a)^{-1}; asserted equal to the brace route.
YbeSolution solution_from_rb(const RbOperator& B);

/// An arbitrary bijection of X x X, stored as T[x*n+y] = (u,v).
using PairMap = std::vector<std::array<int, 2>>;

struct ConjugatedSolution {
  YbeSolution sol;          // T S T^{-1}
  SolutionReport report;    // re-verified; conjugation need not preserve the braid law
};

ConjugatedSolution conjugate_solution(const YbeSolution& S, const PairMap& T);

struct Rack {
  int n = 0;
  std::vector<std::vector<int>> table;  // table[x][y] = x * y
};

struct RackReport {
  bool r1 = false;  // each I_x: y -> y*x bijective
  int r1_witness = -1;
  bool r2 = false;  // (x*y)*z = (x*z)*(y*z)
  std::array<int, 3> r2_witness{-1, -1, -1};
  bool quandle = false;  // x*x = x
  int quandle_witness = -1;

  bool rack() const { return r1 && r2; }
};

RackReport rack_quandle_check(const std::vector<std::vector<int>>& table);

struct RackFormResult {
  YbeSolution conjugated;   // T S T^{-1} with T(x,y) = (x, sigma_x(y))
  SolutionReport report;
  bool displayed_form = false;  // equals (y, sigma_y(tau_{sigma_x^{-1}(y)}(x)))
  bool cond_unique = false;     // unique x with tau_{sigma_x^{-1}(a)}(x) = sigma_a^{-1}(b)
  Rack rack;                    // extracted when cond_unique holds
  RackReport rack_report;
};

/// Conjugation of a left non-degenerate solution to the form (y, ...).
RackFormResult rack_form(const YbeSolution& S);

struct ConjQuandle {
  Rack rack;  // x*y = y^{-1} x y
  bool inner_relation = false;  // I_{x*y} = I_y I_x I_y^{-1}
};

ConjQuandle conj_quandle(const GroupPtr& G);

/// S(x,y) = (y, x*y) from an arbitrary binary table; unverified.
YbeSolution solution_from_rack(const std::vector<std::vector<int>>& table);

struct DirectRbResult {
  YbeSolution sol;  // S(x,y) = (y, B(y) x B(y)^{-1})
  SolutionReport report;
  bool identity = false;  // (B(b)^{-1})^{B(c)} = B(b^{B(c)})
  std::array<int, 2> identity_witness{-1, -1};
};

/// Evaluates the direct construction and the criterion identity, asserting
/// that it is a solution exactly when the identity holds.
DirectRbResult direct_rb_solution(const RbOperator& B);

/// True when S has the shape (y, tau_y(x)) and tau extracts to a rack.
bool is_rack_type(const YbeSolution& S);

}  // namespace braceforge

#endif  // BRACEFORGE_YBE_HPP
