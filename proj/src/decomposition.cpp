#include "rctw/decomposition.hpp"

#include <algorithm>

namespace rctw {

namespace {

template <class ChildrenOf>
std::vector<int> postorder_of(int num_nodes, ChildrenOf&& children_of) {
  std::vector<int> order;
  if (num_nodes == 0) return order;
  order.reserve(num_nodes);
  // Iterative DFS; each entry is (node, next child index).
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  std::vector<char> seen(num_nodes, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    auto& [t, i] = stack.back();
    const auto& ch = children_of(t);
    if (i < ch.size()) {
      const int c = ch[i++];
      if (c >= 0 && c < num_nodes && !seen[c]) {
        seen[c] = 1;
        stack.emplace_back(c, 0);
      }
    } else {
      order.push_back(t);
      stack.pop_back();
    }
  }
  return order;
}

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& b : bags) best = std::max(best, b.size());
  return best == 0 ? 0 : static_cast<int>(best) - 1;
}

int TreeDecomposition::add_node(std::vector<Vertex> bag) {
  std::sort(bag.begin(), bag.end());
  bags.push_back(std::move(bag));
  children.emplace_back();
  return num_nodes() - 1;
}

std::vector<int> RankDecomposition::parents() const {
  std::vector<int> parent(nodes.size(), -1);
  for (std::size_t t = 0; t < nodes.size(); ++t)
    for (int c : nodes[t].children)
      if (c >= 0 && c < num_nodes()) parent[c] = static_cast<int>(t);
  return parent;
}

std::vector<int> RankDecomposition::postorder() const {
  return postorder_of(num_nodes(), [&](int t) -> const std::vector<int>& { return nodes[t].children; });
}

std::vector<VertexSet> RankDecomposition::below_sets(int n) const {
  std::vector<VertexSet> below(nodes.size(), VertexSet(n));
  for (int t : postorder()) {
    if (is_leaf(t)) {
      if (nodes[t].vertex >= 0 && nodes[t].vertex < n) below[t].insert(nodes[t].vertex);
    } else {
      for (int c : nodes[t].children) below[t] |= below[c];
    }
  }
  return below;
}

void RankDecomposition::recompute_width(const Graph& g) {
  const auto below = below_sets(g.num_vertices());
  width = 0;
  for (int t = 1; t < num_nodes(); ++t) width = std::max(width, cut_rank(g, below[t]));
}

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::SimpleLeaf: return "simple_leaf";
    case NodeKind::BoundaryLeaf: return "boundary_leaf";
    case NodeKind::Introduce: return "introduce";
    case NodeKind::Forget: return "forget";
    case NodeKind::Join: return "join";
  }
  return "?";
}

bool parse_node_kind(std::string_view text, NodeKind& out) {
  for (auto k : {NodeKind::SimpleLeaf, NodeKind::BoundaryLeaf, NodeKind::Introduce,
                 NodeKind::Forget, NodeKind::Join}) {
    if (to_string(k) == text) {
      out = k;
      return true;
    }
  }
  return false;
}

std::vector<int> NiceHTreeDecomposition::postorder() const {
  return postorder_of(num_nodes(), [&](int t) -> const std::vector<int>& { return nodes[t].children; });
}

int NiceHTreeDecomposition::computed_width() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return best == 0 ? 0 : static_cast<int>(best) - 1;
}

}  // namespace rctw
