#include <doctest.h>

#include "rctw/errors.hpp"
#include "rctw/torso.hpp"
#include "rctw/validate.hpp"
#include "rctw/width.hpp"
#include "support.hpp"

using namespace rctw;
using namespace rctw::testing;

namespace {

// 3x3 grid on 0..8 and a five-cycle on 9..13 tied to grid corners 0 and 2.
Graph grid_with_pendant_cycle() {
  Graph g(14);
  for (auto [a, b] : grid(3, 3).edges()) g.add_edge(a, b);
  for (int i = 0; i < 5; ++i) g.add_edge(9 + i, 9 + (i + 1) % 5);
  g.add_edge(9, 0);
  g.add_edge(11, 2);
  return g;
}

}  // namespace

TEST_CASE("torso search: whole graph of small rank-width") {
  const auto k10 = find_rc_torso(complete(10), 1);
  REQUIRE(k10.has_value());
  CHECK(k10->achieved_width == 0);
  CHECK(k10->modulator == VertexSet::full(10));
  CHECK(k10->torso.graph.num_vertices() == 0);
  CHECK(k10->components.size() == 1);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform(rng, 1, 12);
    Graph tree(n);
    for (int v = 1; v < n; ++v) tree.add_edge(v, uniform(rng, 0, v - 1));
    CHECK(find_rc_torso(tree, 1)->achieved_width == 0);
  }
}

TEST_CASE("torso search: grid with a pendant five-cycle") {
  const auto g = grid_with_pendant_cycle();
  CHECK(exact_treewidth(g).width == 3);
  // The 3x3 grid itself has rank-width 2, so nearly everything collapses.
  const auto tr = find_rc_torso(g, 2);
  REQUIRE(tr.has_value());
  CHECK(tr->achieved_width == 0);
  CHECK(tr->modulator.size() == 13);
  CHECK(validate_nice_h_decomposition(g, nicify(g, *tr), true).empty());
}

TEST_CASE("torso search: k_max bounds") {
  const auto g = petersen();
  CHECK_FALSE(find_rc_torso(g, 0, 0).has_value());
  const auto some = find_rc_torso(complete(5), 0, 3);
  REQUIRE(some.has_value());
  CHECK(some->achieved_width <= 3);
  CHECK_THROWS_AS(find_rc_torso(Graph(17), 1), ResourceError);
}

TEST_CASE("torso: fixed modulators") {
  const auto g = cycle(5);
  CHECK_THROWS_AS(make_torso_result(g, g.vertex_set(), 1), InputError);
  const auto tr = make_torso_result(g, VertexSet::of(5, {0, 1, 2}), 1);
  CHECK(tr.achieved_width == 1);
  CHECK(tr.components.size() == 1);
  CHECK(tr.torso.to_parent == std::vector<Vertex>{3, 4});
}

TEST_CASE("torso search: parameter ordering and monotonicity in c") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform(rng, 1, 9);
    const auto g = random_graph(rng, n, std::vector<double>{0.2, 0.5, 0.8}[trial % 3]);
    CAPTURE(trial);
    const int tw = exact_treewidth(g).width;
    const int rw = exact_rankwidth(g).width;
    int previous = tw;
    for (int c = 0; c <= 2; ++c) {
      const auto tr = find_rc_torso(g, c);
      REQUIRE(tr.has_value());
      CHECK(tr->achieved_width <= previous);
      CHECK(rw <= c + tr->achieved_width + 1);
      CHECK(validate_tree_decomposition(tr->torso.graph, tr->torso_td).empty());
      previous = tr->achieved_width;
    }
  }
}

TEST_CASE("assembled rank decompositions stay within c + width + 1") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = uniform(rng, 1, 12);
    const auto g = random_graph(rng, n, 0.4);
    const int c = uniform(rng, 1, 2);
    const auto tr = find_rc_torso(g, c);
    REQUIRE(tr.has_value());
    const auto d = nicify(g, *tr);
    const auto rd = assemble_rank_decomposition(g, d);
    CAPTURE(trial);
    const auto check = validate_rank_decomposition(g, rd);
    CHECK(check.violations.empty());
    CHECK(check.width == rd.width);
    CHECK(rd.width <= c + d.width + 1);
  }
  const auto single = assemble_rank_decomposition(Graph(1), nicify(Graph(1), *find_rc_torso(Graph(1), 1)));
  CHECK(single.num_nodes() == 1);
  CHECK(single.width == 0);

  const auto c5 = cycle(5);
  const auto plain = nicify(c5, make_torso_result(c5, VertexSet(5), 1));
  CHECK(plain.width == 2);
  const auto rd = assemble_rank_decomposition(c5, plain);
  CHECK(validate_rank_decomposition(c5, rd).violations.empty());
  CHECK(rd.width <= 3);
}
