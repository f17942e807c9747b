#pragma once

#include <vector>

#include "rctw/decomposition.hpp"

namespace rctw {

/// Twin classes over a rank decomposition of G - X. Vertex ids are those of
/// `graph`; rd leaves are positions in `rest` (ascending ids of V \ X).
struct TwinContext {
  Graph graph;
  VertexSet modulator;
  RankDecomposition rd;
  int c = 0;
  int z = 1;
  std::vector<Vertex> rest;
  std::vector<int> parent;                     // per rd node, -1 at the root
  std::vector<VertexSet> below;                // S_t
  std::vector<std::vector<VertexSet>> classes;  // z slots per node, empties last
  std::vector<std::vector<int>> class_of;       // per node, vertex -> slot or -1

  int num_nodes() const { return rd.num_nodes(); }
};

/// Throws InputError when rd is not a valid decomposition of G - X or its
/// width exceeds c.
TwinContext build_twin_context(const Graph& g, const VertexSet& x, const RankDecomposition& rd, int c);

/// L[j1 * z + j2] = 1 iff R^{t1}_{j1} is complete to R^{t2}_{j2}; siblings only.
std::vector<char> link_matrix(const TwinContext& ctx, int t1, int t2);

/// Slot of the parent class containing each child class; -1 for empty slots.
std::vector<int> lift_map(const TwinContext& ctx, int child, int parent);

}  // namespace rctw
