#include "rctw/generator.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rctw/errors.hpp"
#include "rctw/torso.hpp"
#include "rctw/width.hpp"

namespace rctw {

namespace {

using Rng = std::mt19937_64;

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

bool connected(const Graph& g) { return g.num_vertices() <= 1 || connected_components(g).size() == 1; }

// Pendant vertices and true/false twins keep rank-width at most 1.
Graph distance_hereditary(Rng& rng, int size) {
  Graph g(size);
  std::vector<std::vector<Vertex>> nb(size);
  auto link = [&](Vertex a, Vertex b) {
    g.add_edge(a, b);
    nb[a].push_back(b);
    nb[b].push_back(a);
  };
  for (Vertex v = 1; v < size; ++v) {
    const Vertex u = pick(rng, 0, v - 1);
    const int op = v == 1 ? 0 : pick(rng, 0, 2);
    if (op != 0) {
      for (Vertex w : std::vector<Vertex>(nb[u])) link(v, w);
    }
    if (op != 2) link(v, u);  // pendant or true twin
  }
  return g;
}

Graph rank_one_component(Rng& rng, int size) {
  if (size <= 2) return distance_hereditary(rng, size);
  switch (pick(rng, 0, 2)) {
    case 0: {
      Graph g(size);
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) g.add_edge(i, j);
      return g;
    }
    case 1: {
      const int a = pick(rng, 1, size - 1);
      Graph g(size);
      for (int i = 0; i < a; ++i)
        for (int j = a; j < size; ++j) g.add_edge(i, j);
      return g;
    }
    default:
      return distance_hereditary(rng, size);
  }
}

Graph bounded_component(Rng& rng, int size, int rw) {
  if (rw <= 1) return rank_one_component(rng, size);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Graph g(size);
    const double p = std::uniform_real_distribution<double>(0.3, 0.7)(rng);
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        if (coin(rng, p)) g.add_edge(i, j);
    if (connected(g) && exact_rankwidth(g).width == rw) return g;
  }
  return rank_one_component(rng, size);
}

}  // namespace

GeneratedInstance generate_instance(const GeneratorParams& p) {
  const int size_min = p.component_size_min > 0 ? p.component_size_min : p.component_size;
  if (p.skeleton_tw < 1) throw InputError("skeleton treewidth must be positive");
  if (p.skeleton_size < p.skeleton_tw + 1)
    throw InputError("skeleton size must be at least skeleton treewidth + 1");
  if (p.components < 0) throw InputError("component count must be nonnegative");
  if (p.component_rw < 0 || p.component_rw > 3) throw InputError("component rank-width must lie in 0..3");
  if (p.component_size < 1 || size_min > p.component_size) throw InputError("component sizes must be positive and ordered");
  if (p.component_rw >= 2 && p.component_size > 14) throw InputError("components above rank-width 1 are limited to 14 vertices");
  if (p.component_rw == 0 && p.component_size > 1) throw InputError("rank-width 0 components are single vertices");

  Rng rng(p.seed);
  const int k = p.skeleton_tw;
  const int s = p.skeleton_size;

  // k-tree: bags of size k + 1 grown from an initial clique.
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cliques;  // k-cliques available for growth
  std::vector<std::vector<Vertex>> bags;
  std::vector<Vertex> first(k + 1);
  for (int i = 0; i <= k; ++i) first[i] = i;
  bags.push_back(first);
  for (int i = 0; i <= k; ++i) {
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
    std::vector<Vertex> face;
    for (int j = 0; j <= k; ++j)
      if (j != i) face.push_back(j);
    cliques.push_back(face);
  }
  for (Vertex v = k + 1; v < s; ++v) {
    const auto base = cliques[pick(rng, 0, static_cast<int>(cliques.size()) - 1)];
    for (Vertex u : base) edges.emplace_back(u, v);
    auto bag = base;
    bag.push_back(v);
    bags.push_back(bag);
    for (std::size_t i = 0; i < base.size(); ++i) {
      auto face = base;
      face[i] = v;
      std::sort(face.begin(), face.end());
      cliques.push_back(face);
    }
  }

  std::vector<Graph> parts;
  int total = s;
  for (int i = 0; i < p.components; ++i) {
    parts.push_back(bounded_component(rng, pick(rng, size_min, p.component_size), p.component_rw));
    total += parts.back().num_vertices();
  }

  GeneratedInstance out;
  out.graph = Graph(total);
  out.modulator = VertexSet(total);
  // Thin the skeleton; components below still see full bags in the torso.
  for (auto [a, b] : edges)
    if (coin(rng, 0.8)) out.graph.add_edge(a, b);
  int offset = s;
  for (const auto& part : parts) {
    const int size = part.num_vertices();
    for (auto [a, b] : part.edges()) out.graph.add_edge(offset + a, offset + b);
    for (int v = 0; v < size; ++v) out.modulator.insert(offset + v);
    const auto& bag = bags[pick(rng, 0, static_cast<int>(bags.size()) - 1)];
    std::vector<Vertex> attach;
    for (Vertex u : bag)
      if (coin(rng, 0.5)) attach.push_back(u);
    if (attach.empty()) attach.push_back(bag[pick(rng, 0, static_cast<int>(bag.size()) - 1)]);
    for (Vertex u : attach) {
      const int links = pick(rng, 1, std::min(2, size));
      for (int l = 0; l < links; ++l) out.graph.add_edge(u, offset + pick(rng, 0, size - 1));
    }
    offset += size;
  }
  return out;
}

NiceHTreeDecomposition planted_decomposition(const GeneratedInstance& inst, int component_rw) {
  return nicify(inst.graph, make_torso_result(inst.graph, inst.modulator, component_rw));
}

}  // namespace rctw
