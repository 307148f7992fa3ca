#ifndef BRACEFORGE_GROUP_HPP
#define BRACEFORGE_GROUP_HPP

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braceforge {

// User-facing errors (bad input, unsupported request). CLI maps these to exit 2.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured search/size bound was exceeded.
struct bound_exceeded : invalid_input {
  using invalid_input::invalid_input;
};

// A theorem-backed re-verification failed; signals a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// Finite group as an order x order multiplication table over element
/// indices. Identity is always index 0; inverses are precomputed.
struct FiniteGroup {
  int n = 0;
  std::vector<int> tab;  // flat n*n, tab[a*n+b] = a.b
  std::vector<int> inv;
  std::vector<std::string> labels;
  std::string name;

  int mul(int a, int b) const { return tab[a * n + b]; }
  int inverse(int a) const { return inv[a]; }
  // conjugation is the right action a^b = b^{-1} a b
  int conj(int a, int b) const { return mul(mul(inv[b], a), b); }
  // commutator [a,b] = a^{-1} b^{-1} a b, so that yx = xy[y,x]
  int comm(int a, int b) const { return mul(mul(inv[a], inv[b]), mul(a, b)); }
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;
  /// Index of the element with the given label, or -1.
  int element(const std::string& label) const;
  std::vector<std::vector<int>> table_rows() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Total map G -> G stored as an index array (RB operators, automorphisms,
// lambda maps). Bijectivity is not required.
using GroupMap = std::vector<int>;

GroupMap identity_map(int n);
GroupMap compose(const GroupMap& f, const GroupMap& g);  // (fg)(x) = f(g(x))
GroupMap inverse_map(const GroupMap& f);                 // f must be bijective
bool is_bijective(const GroupMap& f);
bool is_homomorphism(const FiniteGroup& G, const FiniteGroup& H, const GroupMap& f);
bool is_antihomomorphism(const FiniteGroup& G, const FiniteGroup& H, const GroupMap& f);

struct TableDiagnostics {
  bool ok = false;
  std::string axiom;  // "closure" | "identity" | "associativity" | "inverse" | ""
  std::array<int, 3> witness{-1, -1, -1};
  std::string message;
};

/// Reports the first violated group axiom of a square index table, or success.
/// Expects the identity at index 0.
TableDiagnostics verify_group_table(const std::vector<std::vector<int>>& table);

/// Validates and wraps a table; throws invalid_input with the diagnostic on failure.
GroupPtr make_group(std::string name, const std::vector<std::vector<int>>& table,
                    std::vector<std::string> labels);

GroupPtr cyclic_group(int m);
GroupPtr symmetric_group(int m);  // m <= 5
GroupPtr dihedral_group(int m);   // order 2m
GroupPtr quaternion_group();
GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B);
GroupPtr direct_power(const GroupPtr& G, int k);
/// Semidirect product H x| L; action[l] must be an automorphism of H for
/// every l in L and l -> action[l] a homomorphism. Throws invalid_input.
GroupPtr semidirect_product(const GroupPtr& H, const GroupPtr& L,
                            const std::vector<GroupMap>& action);
GroupPtr opposite_group(const GroupPtr& G);
GroupPtr alternating_group(int m);  // m <= 5
/// S3 with the presentation labels e, s1, s2, s1s2, s2s1, s1s2s1.
GroupPtr symmetric3_presented();

/// Parses a constructor descriptor such as "cyclic(6)",
/// "direct_product(cyclic(2),cyclic(3))", "opposite(symmetric(3))".
GroupPtr build_group(const std::string& expr);

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains 0

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const;
};

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& members);
Subgroup subgroup_closure(const GroupPtr& G, const std::vector<int>& generators);
bool is_normal(const Subgroup& S);
/// Quotient by a normal subgroup; coset labels use minimal-index representatives.
GroupPtr quotient_group(const Subgroup& N);
/// Index of the coset of g in the quotient ordering used by quotient_group.
std::vector<int> coset_projection(const Subgroup& N);
std::vector<Subgroup> all_subgroups(const GroupPtr& G);
std::vector<int> center(const FiniteGroup& G);
/// Subgroup of (G,.) generated by all commutators [a,b], a in A, b in B.
std::vector<int> commutator_subgroup(const GroupPtr& G, const std::vector<int>& A,
                                     const std::vector<int>& B);

/// All ordered pairs (H, L) of subgroups with HL = G and H meet L = {e}.
std::vector<std::pair<Subgroup, Subgroup>> exact_factorizations(const GroupPtr& G,
                                                                int bound = 24);

// Series-based predicates; cheap, no automorphism computation.
bool is_nilpotent_group(const GroupPtr& G);
bool is_solvable_group(const GroupPtr& G);
bool is_metabelian_group(const GroupPtr& G);

struct StructureReport {
  bool is_abelian = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  bool is_metabelian = false;
  bool is_complete = false;
  Subgroup center;
  int aut_order = 0;
};
StructureReport structure_report(const GroupPtr& G, int aut_bound = 24);

/// An isomorphism G -> H if one exists. Prefilters on order, abelianness,
/// element-order profile and center size, then backtracks on generator images.
std::optional<GroupMap> isomorphic(const GroupPtr& G, const GroupPtr& H);

/// FNV-1a hash of (order, table), used as a content key in operator JSON.
std::string group_content_hash(const FiniteGroup& G);

}  // namespace braceforge

#endif  // BRACEFORGE_GROUP_HPP
