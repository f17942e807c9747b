#pragma once

#include "rctw/decomposition.hpp"

namespace rctw {

struct TreewidthResult {
  int width = 0;
  TreeDecomposition td;
};

struct RankwidthResult {
  int width = 0;
  RankDecomposition rd;
};

/// Exact treewidth by subset search over elimination orders. Throws
/// ResourceError when the graph has more than `limit` vertices.
TreewidthResult exact_treewidth(const Graph& g, int limit = 20);

/// True iff tw(g) <= k; cheaper than exact_treewidth when the answer is no.
bool treewidth_at_most(const Graph& g, int k, int limit = 20);

/// Exact rank-width by dynamic programming over vertex subsets, O(3^n).
RankwidthResult exact_rankwidth(const Graph& g, int limit = 14);

}  // namespace rctw
