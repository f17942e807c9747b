#pragma once

#include <optional>
#include <vector>

#include "rctw/graph.hpp"

namespace rctw {

/// Number of distinct colors if `coloring` is a proper coloring of every
/// vertex, nullopt otherwise.
std::optional<int> check_coloring(const Graph& g, const std::vector<int>& coloring);

/// True iff the paths run s_i -> t_i along edges, have interiors in V \ X,
/// and cover every vertex of V \ X exactly once.
bool check_path_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                      const std::vector<std::vector<Vertex>>& paths);

/// True iff `order` lists every vertex once and consecutive vertices,
/// including last and first, are adjacent.
bool check_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& order);

/// Edges with exactly one endpoint in `side`.
int cut_size(const Graph& g, const VertexSet& side);

}  // namespace rctw
