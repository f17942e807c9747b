#pragma once

#include <cstdint>

#include "rctw/decomposition.hpp"

namespace rctw {

struct GeneratorParams {
  int skeleton_tw = 2;
  int skeleton_size = 8;
  int component_rw = 1;
  int components = 0;
  int component_size_min = 0;  // 0: same as component_size
  int component_size = 6;
  std::uint64_t seed = 1;
};

/// A random partial k-tree skeleton on vertices 0..skeleton_size-1 followed
/// by connected components of rank-width <= component_rw, each attached to
/// part of one skeleton bag. `modulator` holds the component vertices.
struct GeneratedInstance {
  Graph graph;
  VertexSet modulator;
};

/// Deterministic for fixed parameters. Throws InputError on bad parameters.
GeneratedInstance generate_instance(const GeneratorParams& params);

/// Nice decomposition of a generated instance along its planted modulator.
NiceHTreeDecomposition planted_decomposition(const GeneratedInstance& inst, int component_rw);

}  // namespace rctw
