#ifndef BRACEFORGE_RB_MATRIX_HPP
#define BRACEFORGE_RB_MATRIX_HPP

#include "braceforge/group.hpp"
#include "braceforge/rb_operator.hpp"

namespace braceforge {

/// Candidate weight-1 operator on the split algebra k^n (e_i e_j = d_ij e_i),
/// stored as the coefficient matrix r[i][k] of R(e_i) = sum_k r[i][k] e_k.
/// Entries are restricted to {-1,0,1}.
struct RbMatrix {
  int n = 0;
  std::vector<std::vector<int>> r;
};

RbMatrix zero_matrix(int n);
RbMatrix neg_identity_matrix(int n);

/// The combinatorial characterization:
///   (1) r_ii = 0 with off-diagonal row entries in {0,1}, or r_ii = -1 with
///       off-diagonal row entries in {0,-1};
///   (2) r_ik = r_ki = 0 (i != k) forces r_il r_kl = 0 for l outside {i,k};
///   (3) r_ik != 0 (i != k) forces r_ki = 0 and, for l outside {i,k},
///       r_kl = 0 or r_il = r_ik.
bool check_conditions(const RbMatrix& m);

/// Independent oracle: the weight-1 identity R(x)R(y) = R(R(x)y + xR(y) + xy)
/// evaluated on all basis pairs over exact integer arithmetic.
bool check_rb_identity_algebra(const RbMatrix& m);

/// All valid matrices for n <= 4, in lexicographic row-major order
/// (entries ordered -1 < 0 < 1). The count is 2^n (n+1)^(n-1).
std::vector<RbMatrix> enumerate_algebra_rb(int n);

struct MatrixOrbits {
  int orbit_count = 0;
  std::vector<RbMatrix> representatives;  // lexicographically minimal members
  std::vector<int> orbit_sizes;
};

/// Orbits of the valid matrices under simultaneous row/column permutation.
MatrixOrbits algebra_rb_orbits(int n);

bool is_upper_triangular(const RbMatrix& m);

struct LiftedOperator {
  GroupPtr power;  // the direct power G^n
  RbOperator op;
};

/// Lifts an upper-triangular valid matrix to an RB operator on G^n:
/// t_1 = g_1^{r_11}, t_i = g_i^{r_ii} psi_i(g_{i-1}^{r_{i-1,i}} psi_{i-1}(...
/// psi_2(g_1^{r_1i})...)). psis[j] is the automorphism psi_{j+2} of G, so
/// psis.size() == n-1. The result is re-verified as an RB operator.
LiftedOperator group_rb_from_matrix(const RbMatrix& m, const GroupPtr& G,
                                    const std::vector<GroupMap>& psis);

}  // namespace braceforge

#endif  // BRACEFORGE_RB_MATRIX_HPP
