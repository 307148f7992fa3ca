#ifndef BRACEFORGE_EMBEDDING_HPP
#define BRACEFORGE_EMBEDDING_HPP

#include "braceforge/skew_brace.hpp"

namespace braceforge {

/// The enveloping group of a skew brace: pairs (x,y) with
/// (x,y)*(z,t) = (x o z, y . lambda_x(t)), encoded as x*n + y.
/// G embeds via psi: g -> (e,g), i.e. index g itself.
struct TildeGroup {
  GroupPtr tilde;
  SkewBrace source;
  Subgroup diag;         // H = {(g,g)}
  Subgroup axis;         // L = {(g,e)}
  RbOperator splitting;  // B(h*l) = l^{*(-1)}, equals ((x^{o(-1)} o y), e)

  int n() const { return source.n(); }
  int encode(int x, int y) const { return x * n() + y; }
  int x_of(int u) const { return u / n(); }
  int y_of(int u) const { return u % n(); }
  int psi(int g) const { return g; }
  // circle product of the RB group (tilde, B)
  int circ(int u, int v) const {
    const FiniteGroup& T = *tilde;
    int bu = splitting.images[u];
    return T.mul(T.mul(T.mul(u, bu), v), T.inverse(bu));
  }
};

TildeGroup build_tilde(const SkewBrace& A, int bound = 144);

struct EmbeddingReport {
  bool add_homomorphism = false;   // psi(g)*psi(h) = psi(g.h)
  bool circ_homomorphism = false;  // psi(g) o_B psi(h) = psi(g o h)
  bool injective = false;
  bool star_commutator = false;    // [(e,h),(g,e)] = (e, g*h)
};

EmbeddingReport verify_embedding(const SkewBrace& A, const TildeGroup* prebuilt = nullptr);

struct ZetaReport {
  std::vector<std::vector<int>> series;  // zeta_1 <= zeta_2 <= ..., stabilized
  bool strong_left_nilpotent = false;
  bool series_strong_left_ideals = false;  // each zeta_k, via psi-normality
  // consequence checks, evaluated when strong left nilpotent:
  bool implies_left_star_nilpotent = true;
  bool implies_additive_nilpotent = true;
  bool ideals_meet_left_center = true;  // every nontrivial strong left ideal
};

ZetaReport zeta_series(const SkewBrace& A, int bound = 144);

/// Recovers the inducing RB operator of a brace whose additive group is
/// complete: B(g) = x^{-1} for the unique x with lambda_g = conjugation by x.
/// Verifies the RB identity and the table-for-table round trip.
RbOperator recover_rb_complete(const SkewBrace& A);

}  // namespace braceforge

#endif  // BRACEFORGE_EMBEDDING_HPP
