#pragma once

#include <vector>

#include "rctw/graph.hpp"

namespace rctw::oracle {

/// Iterative-deepening backtracking.
int chromatic_number(const Graph& g, int limit = 16);
/// Minimum cover by independent sets, O(3^n); second opinion for small n.
int chromatic_number_by_independent_sets(const Graph& g, int limit = 10);
/// Held-Karp over (subset, endpoint) states.
bool hamiltonian_cycle(const Graph& g, int limit = 18);
int max_cut(const Graph& g, int limit = 22);

struct ModulatorLimits {
  int max_rest = 8;
  int max_modulator = 4;
};

int precoloring_extension(const Graph& g, const VertexSet& x, const std::vector<int>& precolor,
                          const ModulatorLimits& limits = {});
bool disjoint_paths_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                          const ModulatorLimits& limits = {});
int maxcut_extension(const Graph& g, const VertexSet& x, const VertexSet& s, const ModulatorLimits& limits = {});

}  // namespace rctw::oracle
