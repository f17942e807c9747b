#pragma once

#include <optional>

#include "rctw/decomposition.hpp"

namespace rctw {

struct TorsoLimits {
  int max_vertices = 16;
  int treewidth_limit = 20;
  int rankwidth_limit = 16;
};

struct TorsoResult {
  VertexSet modulator;
  int c = 0;
  Subgraph torso;             // collapse(g, modulator)
  TreeDecomposition torso_td;  // over torso-local ids
  std::vector<ModulatorComponent> components;
  int achieved_width = 0;
};

/// Minimum-width R_c-torso by exhaustive search over modulators, preferring
/// larger and then lexicographically smaller modulators on ties. With k_max
/// the first candidate of width <= k_max in that order is returned, and
/// nullopt when none exists.
std::optional<TorsoResult> find_rc_torso(const Graph& g, int c, std::optional<int> k_max = std::nullopt,
                                         const TorsoLimits& limits = {});

/// Torso, tree decomposition and component rank decompositions for a fixed
/// modulator. Throws InputError if some component has rank-width above c.
TorsoResult make_torso_result(const Graph& g, const VertexSet& x, int c, const TorsoLimits& limits = {});

/// Nice form of a torso result, one boundary leaf per component of G[X].
NiceHTreeDecomposition nicify(const Graph& g, const TorsoResult& torso);

/// Rank decomposition of g of width at most c + width(d) + 1.
RankDecomposition assemble_rank_decomposition(const Graph& g, const NiceHTreeDecomposition& d);

}  // namespace rctw
