#include <doctest.h>

#include "rctw/errors.hpp"
#include "rctw/oracles.hpp"
#include "support.hpp"

using namespace rctw;
using namespace rctw::testing;

TEST_CASE("oracle: chromatic number") {
  CHECK(oracle::chromatic_number(Graph(4)) == 1);
  CHECK(oracle::chromatic_number(Graph(0)) == 0);
  CHECK(oracle::chromatic_number(complete(5)) == 5);
  CHECK(oracle::chromatic_number(cycle(5)) == 3);
  CHECK(oracle::chromatic_number(petersen()) == 3);
  CHECK(oracle::chromatic_number_by_independent_sets(cycle(5)) == 3);
  CHECK_THROWS_AS(oracle::chromatic_number(Graph(17)), ResourceError);
  CHECK_THROWS_AS(oracle::chromatic_number_by_independent_sets(Graph(11)), ResourceError);
}

TEST_CASE("oracle: the two chromatic methods agree") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = uniform(rng, 0, 10);
    const auto g = random_graph(rng, n, std::vector<double>{0.2, 0.5, 0.8}[trial % 3]);
    CHECK(oracle::chromatic_number(g) == oracle::chromatic_number_by_independent_sets(g));
  }
}

TEST_CASE("oracle: Hamiltonian cycle") {
  for (int n = 3; n <= 9; ++n) CHECK(oracle::hamiltonian_cycle(cycle(n)));
  CHECK_FALSE(oracle::hamiltonian_cycle(path(5)));
  CHECK_FALSE(oracle::hamiltonian_cycle(complete_bipartite(2, 3)));
  CHECK(oracle::hamiltonian_cycle(complete_bipartite(3, 3)));
  CHECK_FALSE(oracle::hamiltonian_cycle(petersen()));
  CHECK_FALSE(oracle::hamiltonian_cycle(complete(2)));
  CHECK_THROWS_AS(oracle::hamiltonian_cycle(Graph(19)), ResourceError);
}

TEST_CASE("oracle: max-cut") {
  CHECK(oracle::max_cut(cycle(6)) == 6);
  CHECK(oracle::max_cut(grid(3, 4)) == grid(3, 4).num_edges());
  CHECK(oracle::max_cut(complete(4)) == 4);
  CHECK(oracle::max_cut(cycle(5)) == 4);
  CHECK(oracle::max_cut(Graph(0)) == 0);
  CHECK_THROWS_AS(oracle::max_cut(Graph(23)), ResourceError);
}

TEST_CASE("oracle: modulator problems with an empty remainder") {
  Graph g(3);
  g.add_edge(0, 1);
  const auto x = g.vertex_set();
  CHECK(oracle::precoloring_extension(g, x, {2, 0, 2}) == 2);
  CHECK(oracle::disjoint_paths_cover(g, x, {{0, 1}}));
  CHECK_FALSE(oracle::disjoint_paths_cover(g, x, {{0, 2}}));
  CHECK(oracle::disjoint_paths_cover(g, x, {}));
  CHECK(oracle::maxcut_extension(g, x, VertexSet::of(3, {0})) == 1);
  CHECK(oracle::maxcut_extension(g, x, VertexSet::of(3, {2})) == 0);
  CHECK_THROWS_AS(oracle::precoloring_extension(Graph(9), VertexSet(9), std::vector<int>(9, -1)), ResourceError);
}
