#ifndef BRACEFORGE_MULTIBRACE_HPP
#define BRACEFORGE_MULTIBRACE_HPP

#include "braceforge/rb_operator.hpp"

namespace braceforge {

/// Skew left k-brace: k+1 group tables o_0 .. o_k on one set, where each
/// adjacent pair satisfies a o_i (b o_{i-1} c) =
/// (a o_i b) o_{i-1} a^{o_{i-1}(-1)} o_{i-1} (a o_i c).
struct MultiBrace {
  int n = 0;
  std::vector<std::vector<std::vector<int>>> tables;

  int k() const { return static_cast<int>(tables.size()) - 1; }
};

struct MultibraceReport {
  std::vector<bool> group_ok;              // per table
  std::vector<bool> axiom_ok;              // per level 1..k
  std::array<int, 4> witness{-1, -1, -1, -1};  // (level, a, b, c) of first failure

  bool ok() const;
};

MultibraceReport verify_multibrace(const MultiBrace& M);

/// Tower o_0 = group product, o_{i+1}: x o_{i+1} y =
/// x o_i B(x) o_i y o_i (B(x))^{o_i(-1)}. Each level is re-verified as a
/// group on which B remains an RB operator.
MultiBrace build_multibrace(const RbOperator& B, int k, int cap = 3);

}  // namespace braceforge

#endif  // BRACEFORGE_MULTIBRACE_HPP
