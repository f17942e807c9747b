#pragma once

#include <span>
#include <utility>
#include <vector>

#include "rctw/vertex_set.hpp"

namespace rctw {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on 0..n-1 with one adjacency bit row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Throws InputError on self-loops or out-of-range endpoints; repeated
  /// edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(rows_.size()); }
  int num_edges() const { return num_edges_; }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return rows_[v].size(); }

  /// N(S) \ S.
  VertexSet neighborhood(const VertexSet& s) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet vertex_set() const { return VertexSet::full(num_vertices()); }
  VertexSet empty_set() const { return VertexSet(num_vertices()); }

  bool operator==(const Graph& o) const = default;

 private:
  std::vector<VertexSet> rows_;
  int num_edges_ = 0;
};

/// A graph derived from a parent graph, with the map back to parent ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;  // local id -> parent id, ascending

  /// Parent id -> local id, or -1 when the vertex was dropped.
  std::vector<Vertex> from_parent(int parent_n) const;
};

/// G[S], relabelled to 0..|S|-1 in ascending order of parent ids.
Subgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Connected components ordered by their minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Components of G[S], as subsets of V(G), ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);

/// The torso G o X: deletes X and joins u, v whenever they are adjacent or
/// linked by a path whose interior lies in G[X].
Subgraph collapse(const Graph& g, const VertexSet& x);

/// Rank over GF(2) of the adjacency submatrix between `side` and its
/// complement.
int cut_rank(const Graph& g, const VertexSet& side);

/// Rank over GF(2) of the given bit rows.
int gf2_rank(std::vector<VertexSet> rows);

/// True iff every pair in a x b is an edge. Throws InputError if a and b
/// overlap.
bool is_complete_between(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace rctw
