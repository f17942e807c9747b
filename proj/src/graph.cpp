#include "rctw/graph.hpp"

#include <string>

#include "rctw/errors.hpp"

namespace rctw {

Graph::Graph(int n) {
  if (n < 0) throw InputError("negative vertex count");
  rows_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  const int n = num_vertices();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} out of range for " + std::to_string(n) + " vertices");
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (rows_[u].contains(v)) return;
  rows_[u].insert(v);
  rows_[v].insert(u);
  ++num_edges_;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(num_vertices());
  s.for_each([&](Vertex v) { out |= rows_[v]; });
  return out - s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v = rows_[u].next(u + 1); v != -1; v = rows_[u].next(v + 1))
      out.emplace_back(u, v);
  }
  return out;
}

std::vector<Vertex> Subgraph::from_parent(int parent_n) const {
  std::vector<Vertex> out(parent_n, -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    out[to_parent[i]] = static_cast<Vertex>(i);
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  const int n = g.num_vertices();
  if (s.universe() != n) {
    // Members beyond the graph are an input-domain error; a smaller
    // universe is simply widened.
    for (Vertex v = s.first(); v != -1; v = s.next(v + 1))
      if (v >= n) throw InputError("vertex " + std::to_string(v) + " not in graph");
  }
  Subgraph out;
  s.for_each([&](Vertex v) { out.to_parent.push_back(v); });
  const auto local = out.from_parent(n);
  out.graph = Graph(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const Vertex u = out.to_parent[i];
    g.neighbors(u).for_each([&](Vertex w) {
      if (local[w] > static_cast<Vertex>(i)) out.graph.add_edge(static_cast<Vertex>(i), local[w]);
    });
  }
  return out;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet remaining = s;
  while (!remaining.empty()) {
    VertexSet comp(g.num_vertices());
    VertexSet frontier(g.num_vertices());
    frontier.insert(remaining.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(g.num_vertices());
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      next &= remaining;
      next -= comp;
      frontier = std::move(next);
    }
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertex_set());
}

Subgraph collapse(const Graph& g, const VertexSet& x) {
  const int n = g.num_vertices();
  Subgraph out = induced_subgraph(g, g.vertex_set() - x);
  const auto local = out.from_parent(n);
  for (const auto& comp : components_within(g, x)) {
    const auto boundary = g.neighborhood(comp).to_vector();
    for (std::size_t i = 0; i < boundary.size(); ++i)
      for (std::size_t j = i + 1; j < boundary.size(); ++j)
        out.graph.add_edge(local[boundary[i]], local[boundary[j]]);
  }
  return out;
}

int gf2_rank(std::vector<VertexSet> rows) {
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Vertex pivot = rows[i].first();
    if (pivot == -1) continue;
    ++rank;
    for (std::size_t j = i + 1; j < rows.size(); ++j)
      if (rows[j].contains(pivot)) rows[j] ^= rows[i];
  }
  return rank;
}

int cut_rank(const Graph& g, const VertexSet& side) {
  const VertexSet other = g.vertex_set() - side;
  std::vector<VertexSet> rows;
  rows.reserve(side.size());
  side.for_each([&](Vertex v) { rows.push_back(g.neighbors(v) & other); });
  return gf2_rank(std::move(rows));
}

bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InputError("is_complete_between: sets overlap");
  bool complete = true;
  a.for_each([&](Vertex v) {
    if (complete && !b.is_subset_of(g.neighbors(v))) complete = false;
  });
  return complete;
}

}  // namespace rctw
