#ifndef BRACEFORGE_AUTOMORPHISM_HPP
#define BRACEFORGE_AUTOMORPHISM_HPP

#include "braceforge/group.hpp"

namespace braceforge {

/// Complete automorphism list of G, sorted lexicographically by image array.
/// Brute force over bijections for |G| <= 8, generator-image backtracking above.
std::vector<GroupMap> automorphisms(const GroupPtr& G, int bound = 24);

/// Test-oracle variant: enumerate all bijections fixing 0 and filter.
std::vector<GroupMap> automorphisms_bruteforce(const GroupPtr& G);

/// Hol(G) = Aut(G) x| G with (f,a)(g,b) = (fg, a f(b)). Element index
/// encodes (aut, element) as aut * |G| + element; index 0 is (id, e).
struct HolomorphGroup {
  GroupPtr hol;
  GroupPtr base;
  std::vector<GroupMap> auts;

  int aut_of(int x) const { return x / base->n; }
  int elem_of(int x) const { return x % base->n; }
  int encode(int f, int a) const { return f * base->n + a; }
  // the action (f,a).b = a f(b)
  int act(int x, int b) const { return base->mul(elem_of(x), auts[aut_of(x)][b]); }
};

HolomorphGroup holomorph(const GroupPtr& G, int hol_bound = 400, int aut_bound = 24);

/// All subgroups of Hol(G) of order |G| acting freely and transitively on G,
/// i.e. those on which the projection to G is bijective. Deterministic order.
std::vector<Subgroup> regular_subgroups(const HolomorphGroup& H, int group_bound = 8);

}  // namespace braceforge

#endif  // BRACEFORGE_AUTOMORPHISM_HPP
