#include <doctest.h>

#include "rctw/certificates.hpp"
#include "rctw/errors.hpp"
#include "rctw/modulator.hpp"
#include "rctw/oracles.hpp"
#include "support.hpp"

using namespace rctw;
using namespace rctw::testing;

namespace {

RankDecomposition rest_rd(const Graph& g, const VertexSet& x) {
  return exact_rankwidth(induced_subgraph(g, g.vertex_set() - x).graph).rd;
}

}  // namespace

TEST_CASE("precoloring: a lone neighbour of the modulator needs a second color") {
  Graph g(2);
  g.add_edge(0, 1);
  const auto x = VertexSet::of(2, {0});
  auto res = precoloring_extension(g, x, {0, -1}, rest_rd(g, x), 1);
  CHECK(res.colors == 2);
  CHECK(check_coloring(g, res.coloring) == 2);
}

TEST_CASE("precoloring: K2 hanging off two differently colored modulator vertices") {
  // u=0 (color 0), w=1 (color 1), K2 on {2,3}, both adjacent to u and w.
  Graph g(4);
  for (auto [a, b] : std::vector<Edge>{{2, 3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}) g.add_edge(a, b);
  const auto x = VertexSet::of(4, {0, 1});
  const std::vector<int> pre{0, 1, -1, -1};
  const int expected = oracle::precoloring_extension(g, x, pre);
  CHECK(expected == 4);
  CHECK(precoloring_extension(g, x, pre, rest_rd(g, x), 1).colors == expected);
}

TEST_CASE("precoloring: empty remainder uses exactly the precolors") {
  Graph g(3);
  g.add_edge(0, 1);
  const auto x = g.vertex_set();
  CHECK(precoloring_extension(g, x, {0, 1, 0}, RankDecomposition{}, 1).colors == 2);
}

TEST_CASE("precoloring: rejects improper or out-of-range precolors") {
  Graph g(3);
  g.add_edge(0, 1);
  const auto x = VertexSet::of(3, {0, 1});
  const auto rd = rest_rd(g, x);
  CHECK_THROWS_AS(precoloring_extension(g, x, {0, 0, -1}, rd, 1), InputError);
  CHECK_THROWS_AS(precoloring_extension(g, x, {0, 2, -1}, rd, 1), InputError);
}

TEST_CASE("paths cover: small examples") {
  // s=0, t=1, a=2, b=3 with s-a, a-b, b-t.
  Graph g(4);
  for (auto [a, b] : std::vector<Edge>{{0, 2}, {2, 3}, {3, 1}}) g.add_edge(a, b);
  const auto x = VertexSet::of(4, {0, 1});
  const std::vector<Edge> pairs{{0, 1}};
  CHECK(oracle::disjoint_paths_cover(g, x, pairs));
  auto res = disjoint_paths_cover(g, x, pairs, rest_rd(g, x), 1);
  REQUIRE(res.feasible);
  CHECK(check_path_cover(g, x, pairs, res.paths));

  Graph empty(0);
  CHECK(disjoint_paths_cover(empty, VertexSet(0), {}, RankDecomposition{}, 1).feasible);

  Graph h(3);
  h.add_edge(2, 1);
  const auto hx = VertexSet::of(3, {0, 1});
  CHECK_FALSE(disjoint_paths_cover(h, hx, {{0, 1}}, rest_rd(h, hx), 1).feasible);
  CHECK_THROWS_AS(disjoint_paths_cover(h, hx, {{0, 0}}, rest_rd(h, hx), 1), InputError);
}

TEST_CASE("max-cut extension: small examples") {
  Graph g(2);
  g.add_edge(0, 1);
  const auto x = VertexSet::of(2, {0});
  CHECK(maxcut_extension(g, x, x, rest_rd(g, x), 1).value == 1);

  const Graph k3 = complete(3);
  const auto kx = VertexSet::of(3, {0});
  CHECK(oracle::maxcut_extension(k3, kx, kx) == 2);
  CHECK(maxcut_extension(k3, kx, kx, rest_rd(k3, kx), 1).value == 2);

  Graph e(2);
  e.add_edge(0, 1);
  CHECK(maxcut_extension(e, e.vertex_set(), VertexSet::of(2, {0}), RankDecomposition{}, 1).value == 1);
  CHECK_THROWS_AS(maxcut_extension(g, x, VertexSet::of(2, {1}), rest_rd(g, x), 1), InputError);
}

TEST_CASE("modulator solvers agree with the oracles on random instances") {
  std::mt19937_64 rng(20240611);
  int feasible_covers = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto inst = random_modulator_instance(rng);
    CAPTURE(trial);
    const auto pre = precoloring_extension(inst.g, inst.x, inst.precolor, inst.rd, inst.c);
    CHECK(pre.colors == oracle::precoloring_extension(inst.g, inst.x, inst.precolor));
    CHECK(check_coloring(inst.g, pre.coloring) == pre.colors);
    inst.x.for_each([&](Vertex v) { CHECK(pre.coloring[v] == inst.precolor[v]); });

    const auto cover = disjoint_paths_cover(inst.g, inst.x, inst.pairs, inst.rd, inst.c);
    CHECK(cover.feasible == oracle::disjoint_paths_cover(inst.g, inst.x, inst.pairs));
    if (cover.feasible) {
      ++feasible_covers;
      CHECK(check_path_cover(inst.g, inst.x, inst.pairs, cover.paths));
    }

    const auto cut = maxcut_extension(inst.g, inst.x, inst.s, inst.rd, inst.c);
    CHECK(cut.value == oracle::maxcut_extension(inst.g, inst.x, inst.s));
    CHECK(cut_size(inst.g, cut.side) == cut.value);
    CHECK((cut.side & inst.x) == inst.s);
    // Swapping the sides of X leaves the optimum unchanged.
    CHECK(maxcut_extension(inst.g, inst.x, inst.x - inst.s, inst.rd, inst.c).value == cut.value);
  }
  CHECK(feasible_covers >= 20);
}
