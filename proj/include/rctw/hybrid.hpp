#pragma once

#include <vector>

#include "rctw/decomposition.hpp"

namespace rctw {

struct ChromaticSolution {
  int colors = 0;
  std::vector<int> coloring;
};

struct HamiltonianSolution {
  bool exists = false;
  std::vector<Vertex> cycle;  // vertex order, empty when no cycle exists
};

struct MaxCutSolution {
  int value = 0;
  VertexSet side;
};

/// Throws InputError unless d is a valid nice H-tree decomposition of g.
void require_valid_decomposition(const Graph& g, const NiceHTreeDecomposition& d);

ChromaticSolution solve_chromatic(const Graph& g, const NiceHTreeDecomposition& d);

/// Graphs with fewer than three vertices have no Hamiltonian cycle.
HamiltonianSolution solve_hamiltonian(const Graph& g, const NiceHTreeDecomposition& d);

MaxCutSolution solve_maxcut(const Graph& g, const NiceHTreeDecomposition& d);

}  // namespace rctw
