#pragma once

#include <utility>
#include <vector>

#include "rctw/decomposition.hpp"

namespace rctw {

struct PrecoloringResult {
  int colors = 0;
  std::vector<int> coloring;  // every vertex of g; X keeps its precolor
};

/// Minimum number of colors of a proper coloring of g extending the
/// precoloring of X. `precolor` is indexed by vertex; entries on X must lie in
/// [0, |X|), other entries are ignored. rd decomposes G - X (ascending ids).
PrecoloringResult precoloring_extension(const Graph& g, const VertexSet& x, const std::vector<int>& precolor,
                                        const RankDecomposition& rd, int c);

struct PathCoverResult {
  bool feasible = false;
  std::vector<std::vector<Vertex>> paths;  // paths[i] runs from s_i to t_i
};

/// Internally disjoint s_i-t_i paths whose interiors partition V(G) \ X.
PathCoverResult disjoint_paths_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                                     const RankDecomposition& rd, int c);

struct CutResult {
  int value = 0;
  VertexSet side;  // V1, with V1 & X == s
};

/// Maximum cut of g over partitions whose first side meets X exactly in s.
CutResult maxcut_extension(const Graph& g, const VertexSet& x, const VertexSet& s, const RankDecomposition& rd,
                           int c);

}  // namespace rctw
