#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rctw/graph.hpp"

namespace rctw {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,  // unreadable input or bad flags
  kExitInfeasible = 2,
  kExitResource = 3,
  kExitFingerprint = 4,
  kExitInvalid = 5,
  kExitMismatch = 6,  // crosscheck disagreement or a failed self-check
};

struct CrosscheckGraph {
  Graph graph;
  double p = 0;  // edge probability it was drawn with
};

/// The random graphs `crosscheck` tests, in trial order.
std::vector<CrosscheckGraph> crosscheck_graphs(int n_max, int trials, std::uint64_t seed);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rctw
