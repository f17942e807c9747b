#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rctw/graph.hpp"

namespace rctw {

/// Rooted tree decomposition. Node 0 is the root; bags are sorted.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::vector<int>> children;

  int num_nodes() const { return static_cast<int>(bags.size()); }
  /// max |bag| - 1, and 0 for a decomposition whose bags are all empty.
  int width() const;
  int add_node(std::vector<Vertex> bag);
};

/// Rooted binary tree whose leaves carry the vertices of a graph. Node 0 is
/// the root; internal nodes have exactly two children. A graph with one
/// vertex is a single leaf; the empty graph has no nodes.
struct RankDecomposition {
  struct Node {
    std::vector<int> children;
    Vertex vertex = -1;  // set on leaves only
  };
  std::vector<Node> nodes;
  int width = 0;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  bool is_leaf(int t) const { return nodes[t].children.empty(); }
  std::vector<int> parents() const;
  /// Nodes ordered so every child precedes its parent.
  std::vector<int> postorder() const;
  /// Vertices mapped to leaves below each node.
  std::vector<VertexSet> below_sets(int n) const;
  /// Recomputes `width` as the largest cut-rank over tree edges.
  void recompute_width(const Graph& g);
};

enum class NodeKind { SimpleLeaf, BoundaryLeaf, Introduce, Forget, Join };

std::string_view to_string(NodeKind kind);
bool parse_node_kind(std::string_view text, NodeKind& out);

struct NiceNode {
  NodeKind kind = NodeKind::SimpleLeaf;
  Vertex vertex = -1;   // introduced / forgotten vertex
  int component = -1;   // boundary leaves: index into components
  std::vector<Vertex> bag;
  std::vector<int> children;
};

/// A connected component C of G[X] with a rank decomposition of G[C]. Leaves
/// of `rd` are labelled with positions in `vertices` (ascending vertex ids).
struct ModulatorComponent {
  std::vector<Vertex> vertices;
  RankDecomposition rd;
};

/// Nice tree decomposition of the torso G o X whose boundary leaves stand in
/// for the collapsed components of G[X].
struct NiceHTreeDecomposition {
  VertexSet modulator;
  int c = 0;
  int width = 0;
  std::vector<NiceNode> nodes;  // node 0 is the root
  std::vector<ModulatorComponent> components;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  std::vector<int> postorder() const;
  int computed_width() const;
};

}  // namespace rctw
