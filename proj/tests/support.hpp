#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "rctw/graph.hpp"

namespace rctw::testing {

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

inline Graph grid(int rows, int cols) {
  Graph g(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline VertexSet random_subset(std::mt19937_64& rng, int n, double p) {
  VertexSet s(n);
  std::bernoulli_distribution coin(p);
  for (int v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

}  // namespace rctw::testing

#include "rctw/width.hpp"

namespace rctw::testing {

/// Random instance of the modulator problems: G - X has rank-width <= c.
struct ModulatorInstance {
  Graph g;
  VertexSet x;
  int c = 1;
  RankDecomposition rd;       // of G - X, ascending ids
  std::vector<int> precolor;  // proper on G[X], values in [0, |X|)
  std::vector<Edge> pairs;
  VertexSet s;
};

inline ModulatorInstance random_modulator_instance(std::mt19937_64& rng, int max_rest = 8, int max_x = 4) {
  while (true) {
    ModulatorInstance inst;
    const int rest = uniform(rng, 0, max_rest);
    const int k = uniform(rng, 0, max_x);
    const int n = rest + k;
    const double p = std::vector<double>{0.2, 0.4, 0.6, 0.8}[uniform(rng, 0, 3)];
    inst.g = random_graph(rng, n, p);
    // X is a random k-subset.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    inst.x = VertexSet(n);
    for (int i = 0; i < k; ++i) inst.x.insert(perm[i]);
    const auto xs = inst.x.to_vector();

    // Plant a path system through V \ X for about half of the pair lists.
    if (k >= 2) {
      const int m = uniform(rng, 1, std::min(k, 3));
      for (int i = 0; i < m; ++i) {
        const int a = uniform(rng, 0, k - 1);
        int b = uniform(rng, 0, k - 2);
        if (b >= a) ++b;
        inst.pairs.emplace_back(xs[a], xs[b]);
      }
      if (uniform(rng, 0, 1) == 1) {
        std::vector<int> rest_vertices;
        for (int v = 0; v < n; ++v)
          if (!inst.x.contains(v)) rest_vertices.push_back(v);
        std::shuffle(rest_vertices.begin(), rest_vertices.end(), rng);
        std::vector<std::vector<int>> pieces(m);
        for (int v : rest_vertices) pieces[uniform(rng, 0, m - 1)].push_back(v);
        for (int i = 0; i < m; ++i) {
          int prev = inst.pairs[i].first;
          for (int v : pieces[i]) {
            inst.g.add_edge(prev, v);
            prev = v;
          }
          if (prev != inst.pairs[i].second) inst.g.add_edge(prev, inst.pairs[i].second);
        }
      }
    }

    const auto sub = induced_subgraph(inst.g, inst.g.vertex_set() - inst.x);
    auto rw = exact_rankwidth(sub.graph);
    inst.c = uniform(rng, 1, 2);
    if (rw.width > inst.c) continue;
    inst.rd = std::move(rw.rd);

    inst.precolor.assign(n, -1);
    for (int v : xs) {
      std::vector<int> options;
      for (int col = 0; col < k; ++col) {
        bool ok = true;
        for (int w : xs)
          if (inst.precolor[w] == col && inst.g.has_edge(v, w)) ok = false;
        if (ok) options.push_back(col);
      }
      inst.precolor[v] = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
    }
    inst.s = VertexSet(n);
    for (int v : xs)
      if (uniform(rng, 0, 1) == 1) inst.s.insert(v);
    return inst;
  }
}

}  // namespace rctw::testing
