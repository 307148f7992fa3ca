#ifndef BRACEFORGE_RB_OPERATOR_HPP
#define BRACEFORGE_RB_OPERATOR_HPP

#include "braceforge/group.hpp"

namespace braceforge {

/// Rota-Baxter operator on a finite group. Weight +1 satisfies
/// B(g)B(h) = B(g B(g) h B(g)^{-1}), weight -1 satisfies
/// C(g)C(h) = C(C(g) h C(g)^{-1} g).
struct RbOperator {
  GroupPtr group;
  GroupMap images;
  int weight = 1;

  int operator()(int g) const { return images[g]; }
};

struct PairCheck {
  bool ok = true;
  std::array<int, 2> witness{-1, -1};
};

PairCheck is_rb_operator(const FiniteGroup& G, const GroupMap& B, int weight);

/// Constant-identity operator B_0(g) = e.
RbOperator rb_zero(const GroupPtr& G);
/// Inversion operator B_{-1}(g) = g^{-1}.
RbOperator rb_inverse(const GroupPtr& G);

/// All weight-1 RB operators on G by backtracking over images in index
/// order, seeded with the forced value B(e) = e. Output is ordered
/// lexicographically by image array. jobs > 1 partitions the search on the
/// image of the first non-identity element; the merged output is identical.
std::vector<RbOperator> enumerate_rb_operators(const GroupPtr& G, int bound = 12,
                                               int jobs = 1);

enum class RbTransform { tilde, aut_conj, weight_swap };

/// tilde: B~(g) = g^{-1} B(g^{-1});  aut_conj: B^(phi) = phi^{-1} B phi;
/// weight_swap: C(g) = B(g^{-1}), mapping weight 1 <-> weight -1.
/// The result is re-verified; failure throws internal_error.
RbOperator transform_rb(const RbOperator& B, RbTransform kind,
                        const GroupMap* phi = nullptr);

/// Splitting operator of an exact factorization G = HL: B(hl) = l^{-1}.
RbOperator splitting_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L);

/// B(hlm) = C(l) m^{-1} for G = HLM with pairwise trivial intersections,
/// [H,L] = {e}, [C(L),M] = {e} and C an RB operator on L.
RbOperator triangular_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L,
                         const Subgroup& M, const GroupMap& C);

/// B(hl) = C(l) for an internal semidirect decomposition G = H x| L.
RbOperator semidirect_rb(const GroupPtr& G, const Subgroup& H, const Subgroup& L,
                         const GroupMap& C);

/// B = f for a homomorphism (or antihomomorphism) f with abelian image.
RbOperator hom_rb(const GroupPtr& G, const GroupMap& f);

/// The derived circle group (G, o) with g o h = g B(g) h B(g)^{-1}.
/// Also checks that B is an RB operator on (G, o) and that
/// B: (G, o) -> (G, .) is a homomorphism; violations throw internal_error.
GroupPtr derived_circle_group(const RbOperator& B);

struct RbCriteria {
  bool abelian_circ = false;  // [y, B(x)^{-1}][B(y)^{-1}, x] = [y, x]
  std::array<int, 2> abelian_circ_witness{-1, -1};
  bool hom_property = false;  // B(g o h) = B(g) B(h)
  std::array<int, 2> hom_witness{-1, -1};
  bool direct_solution = false;  // (B(b)^{-1})^{B(c)} = B(b^{B(c)})
  std::array<int, 2> direct_solution_witness{-1, -1};
};

RbCriteria rb_criteria(const RbOperator& B);

struct RbOrbitPartition {
  std::vector<std::vector<int>> orbits;  // indices into the operator list
  std::vector<GroupMap> canonical;       // lexicographically minimal member
  std::vector<int> tilde_partner;        // orbit index containing tilde of rep
};

/// Partition of the given operators into orbits of the Aut(G)-conjugation
/// action, with an optional tilde pairing between orbits.
RbOrbitPartition classify_rb_orbits(const GroupPtr& G,
                                    const std::vector<RbOperator>& ops,
                                    const std::vector<GroupMap>& auts);

}  // namespace braceforge

#endif  // BRACEFORGE_RB_OPERATOR_HPP
