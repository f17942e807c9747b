#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rctw/decomposition.hpp"

namespace rctw {

enum class ViolationKind {
  // tree shape
  MalformedTree,
  BagVertexOutOfRange,
  // tree decompositions
  VertexUncovered,
  EdgeUncovered,
  VertexSubtreeDisconnected,
  // rank decompositions
  LeafMapNotBijective,
  BadArity,
  CachedWidthMismatch,
  // nice H-tree decompositions, structural conditions 1-5
  TooManyChildren,          // 1
  JoinBagMismatch,          // 2
  IntroduceForgetMismatch,  // 3
  InvalidLeaf,              // 4
  BoundaryLeafMismatch,     // 5
  NodeKindMismatch,
  BagMeetsModulator,
  ComponentPartitionMismatch,
  ComponentRankDecompositionInvalid,
  RankWidthBudgetExceeded,
  DeclaredWidthMismatch,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string detail;
};

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind);
std::string describe(const std::vector<Violation>& vs);

std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td);

struct RankCheck {
  std::vector<Violation> violations;
  int width = 0;  // recomputed; meaningful when the leaf map is a bijection
};

RankCheck validate_rank_decomposition(const Graph& g, const RankDecomposition& rd);

std::vector<Violation> validate_nice_h_decomposition(const Graph& g, const NiceHTreeDecomposition& d,
                                                     bool check_rw);

}  // namespace rctw
