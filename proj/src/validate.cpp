#include "rctw/validate.hpp"

#include <algorithm>
#include <sstream>

namespace rctw {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::MalformedTree: return "malformed-tree";
    case ViolationKind::BagVertexOutOfRange: return "bag-vertex-out-of-range";
    case ViolationKind::VertexUncovered: return "vertex-uncovered";
    case ViolationKind::EdgeUncovered: return "edge-uncovered";
    case ViolationKind::VertexSubtreeDisconnected: return "vertex-subtree-disconnected";
    case ViolationKind::LeafMapNotBijective: return "leaf-map-not-bijective";
    case ViolationKind::BadArity: return "bad-arity";
    case ViolationKind::CachedWidthMismatch: return "cached-width-mismatch";
    case ViolationKind::TooManyChildren: return "too-many-children";
    case ViolationKind::JoinBagMismatch: return "join-bag-mismatch";
    case ViolationKind::IntroduceForgetMismatch: return "introduce-forget-mismatch";
    case ViolationKind::InvalidLeaf: return "invalid-leaf";
    case ViolationKind::BoundaryLeafMismatch: return "boundary-leaf-mismatch";
    case ViolationKind::NodeKindMismatch: return "node-kind-mismatch";
    case ViolationKind::BagMeetsModulator: return "bag-meets-modulator";
    case ViolationKind::ComponentPartitionMismatch: return "component-partition-mismatch";
    case ViolationKind::ComponentRankDecompositionInvalid: return "component-rank-decomposition-invalid";
    case ViolationKind::RankWidthBudgetExceeded: return "rank-width-budget-exceeded";
    case ViolationKind::DeclaredWidthMismatch: return "declared-width-mismatch";
  }
  return "?";
}

bool has_violation(const std::vector<Violation>& vs, ViolationKind kind) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.kind == kind; });
}

std::string describe(const std::vector<Violation>& vs) {
  std::ostringstream out;
  for (const auto& v : vs) out << to_string(v.kind) << ": " << v.detail << '\n';
  return out.str();
}

namespace {

std::string set_text(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

/// Root 0, every other node with exactly one parent, everything reachable.
template <class ChildrenOf>
bool check_tree_shape(int num_nodes, ChildrenOf&& children_of, std::vector<Violation>& out) {
  if (num_nodes == 0) {
    out.push_back({ViolationKind::MalformedTree, "decomposition has no nodes"});
    return false;
  }
  bool ok = true;
  std::vector<int> parent_count(num_nodes, 0);
  for (int t = 0; t < num_nodes; ++t) {
    for (int c : children_of(t)) {
      if (c < 0 || c >= num_nodes) {
        out.push_back({ViolationKind::MalformedTree,
                       "node " + std::to_string(t) + " has out-of-range child " + std::to_string(c)});
        ok = false;
      } else {
        ++parent_count[c];
      }
    }
  }
  if (!ok) return false;
  if (parent_count[0] != 0) {
    out.push_back({ViolationKind::MalformedTree, "root 0 has a parent"});
    ok = false;
  }
  for (int t = 1; t < num_nodes; ++t) {
    if (parent_count[t] != 1) {
      out.push_back({ViolationKind::MalformedTree,
                     "node " + std::to_string(t) + " has " + std::to_string(parent_count[t]) + " parents"});
      ok = false;
    }
  }
  if (!ok) return false;
  std::vector<char> seen(num_nodes, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : children_of(t)) {
      if (!seen[c]) {
        seen[c] = 1;
        stack.push_back(c);
      }
    }
  }
  if (reached != num_nodes) {
    out.push_back({ViolationKind::MalformedTree, "some nodes are unreachable from the root"});
    return false;
  }
  return true;
}

}  // namespace

std::vector<Violation> validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
  std::vector<Violation> out;
  if (td.children.size() != td.bags.size()) {
    out.push_back({ViolationKind::MalformedTree, "children and bags differ in length"});
    return out;
  }
  if (!check_tree_shape(td.num_nodes(), [&](int t) -> const std::vector<int>& { return td.children[t]; }, out))
    return out;

  const int n = g.num_vertices();
  std::vector<VertexSet> bag_sets;
  bag_sets.reserve(td.bags.size());
  bool in_range = true;
  for (int t = 0; t < td.num_nodes(); ++t) {
    VertexSet s(n);
    for (Vertex v : td.bags[t]) {
      if (v < 0 || v >= n) {
        out.push_back({ViolationKind::BagVertexOutOfRange,
                       "node " + std::to_string(t) + " holds vertex " + std::to_string(v)});
        in_range = false;
      } else {
        s.insert(v);
      }
    }
    bag_sets.push_back(std::move(s));
  }
  if (!in_range) return out;

  std::vector<int> nodes_with(n, 0);
  std::vector<int> edges_with(n, 0);
  for (int t = 0; t < td.num_nodes(); ++t) {
    bag_sets[t].for_each([&](Vertex v) { ++nodes_with[v]; });
    for (int c : td.children[t])
      (bag_sets[t] & bag_sets[c]).for_each([&](Vertex v) { ++edges_with[v]; });
  }
  for (Vertex v = 0; v < n; ++v) {
    if (nodes_with[v] == 0) {
      out.push_back({ViolationKind::VertexUncovered, "vertex " + std::to_string(v) + " is in no bag"});
    } else if (edges_with[v] != nodes_with[v] - 1) {
      out.push_back({ViolationKind::VertexSubtreeDisconnected,
                     "bags containing vertex " + std::to_string(v) + " are not connected"});
    }
  }
  for (auto [u, v] : g.edges()) {
    const bool covered = std::any_of(bag_sets.begin(), bag_sets.end(),
                                     [&](const VertexSet& b) { return b.contains(u) && b.contains(v); });
    if (!covered)
      out.push_back({ViolationKind::EdgeUncovered,
                     "edge {" + std::to_string(u) + "," + std::to_string(v) + "} uncovered"});
  }
  return out;
}

RankCheck validate_rank_decomposition(const Graph& g, const RankDecomposition& rd) {
  RankCheck res;
  auto& out = res.violations;
  const int n = g.num_vertices();
  if (n == 0) {
    if (rd.num_nodes() != 0)
      out.push_back({ViolationKind::LeafMapNotBijective, "empty graph must have an empty decomposition"});
    if (rd.width != 0) out.push_back({ViolationKind::CachedWidthMismatch, "cached width " +
                                      std::to_string(rd.width) + " but recomputed 0"});
    return res;
  }
  if (!check_tree_shape(rd.num_nodes(), [&](int t) -> const std::vector<int>& { return rd.nodes[t].children; }, out))
    return res;

  std::vector<int> leaf_of(n, -1);
  bool bijective = true;
  for (int t = 0; t < rd.num_nodes(); ++t) {
    const auto& node = rd.nodes[t];
    if (!node.children.empty() && node.children.size() != 2) {
      out.push_back({ViolationKind::BadArity, "node " + std::to_string(t) + " has " +
                                                  std::to_string(node.children.size()) + " children"});
    }
    if (node.children.empty()) {
      if (node.vertex < 0 || node.vertex >= n) {
        out.push_back({ViolationKind::LeafMapNotBijective,
                       "leaf " + std::to_string(t) + " carries invalid vertex " + std::to_string(node.vertex)});
        bijective = false;
      } else if (leaf_of[node.vertex] != -1) {
        out.push_back({ViolationKind::LeafMapNotBijective,
                       "vertex " + std::to_string(node.vertex) + " sits on two leaves"});
        bijective = false;
      } else {
        leaf_of[node.vertex] = t;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (bijective && leaf_of[v] == -1) {
      out.push_back({ViolationKind::LeafMapNotBijective, "vertex " + std::to_string(v) + " has no leaf"});
      bijective = false;
    }
  }
  if (!bijective) return res;

  const auto below = rd.below_sets(n);
  for (int t = 1; t < rd.num_nodes(); ++t) res.width = std::max(res.width, cut_rank(g, below[t]));
  if (res.width != rd.width)
    out.push_back({ViolationKind::CachedWidthMismatch,
                   "cached width " + std::to_string(rd.width) + " but recomputed " + std::to_string(res.width)});
  return res;
}

std::vector<Violation> validate_nice_h_decomposition(const Graph& g, const NiceHTreeDecomposition& d,
                                                     bool check_rw) {
  std::vector<Violation> out;
  const int n = g.num_vertices();
  if (d.modulator.universe() != n) {
    out.push_back({ViolationKind::ComponentPartitionMismatch, "modulator universe does not match the graph"});
    return out;
  }
  if (!check_tree_shape(d.num_nodes(), [&](int t) -> const std::vector<int>& { return d.nodes[t].children; }, out))
    return out;

  const VertexSet& x = d.modulator;
  const auto actual_components = components_within(g, x);
  std::vector<VertexSet> declared;
  bool components_ok = true;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    VertexSet s(n);
    for (Vertex v : d.components[i].vertices) {
      if (v < 0 || v >= n) {
        out.push_back({ViolationKind::ComponentPartitionMismatch,
                       "component " + std::to_string(i) + " holds invalid vertex " + std::to_string(v)});
        components_ok = false;
      } else {
        s.insert(v);
      }
    }
    if (!std::is_sorted(d.components[i].vertices.begin(), d.components[i].vertices.end()) ||
        static_cast<int>(d.components[i].vertices.size()) != s.size()) {
      out.push_back({ViolationKind::ComponentPartitionMismatch,
                     "component " + std::to_string(i) + " vertex list is not strictly ascending"});
      components_ok = false;
    }
    declared.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < declared.size(); ++i) {
    if (std::find(actual_components.begin(), actual_components.end(), declared[i]) == actual_components.end()) {
      out.push_back({ViolationKind::ComponentPartitionMismatch,
                     "component " + std::to_string(i) + " is not a connected component of G[X]"});
      components_ok = false;
    }
  }
  for (const auto& actual : actual_components) {
    if (std::count(declared.begin(), declared.end(), actual) != 1) {
      out.push_back({ViolationKind::ComponentPartitionMismatch,
                     "component " + set_text(actual.to_vector()) + " of G[X] is not listed exactly once"});
      components_ok = false;
    }
  }

  std::vector<int> boundary_leaves_of(d.components.size(), 0);
  bool bags_ok = true;
  for (int t = 0; t < d.num_nodes(); ++t) {
    const auto& node = d.nodes[t];
    const std::string where = "node " + std::to_string(t);
    for (Vertex v : node.bag) {
      if (v < 0 || v >= n) {
        out.push_back({ViolationKind::BagVertexOutOfRange, where + " holds vertex " + std::to_string(v)});
        bags_ok = false;
      } else if (x.contains(v)) {
        out.push_back({ViolationKind::BagMeetsModulator, where + " holds modulator vertex " + std::to_string(v)});
        bags_ok = false;
      }
    }
    if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
        std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end()) {
      out.push_back({ViolationKind::BagVertexOutOfRange, where + " bag is not strictly ascending"});
      bags_ok = false;
    }
  }
  if (!bags_ok) return out;

  for (int t = 0; t < d.num_nodes(); ++t) {
    const auto& node = d.nodes[t];
    const std::string where = "node " + std::to_string(t);
    const auto& ch = node.children;
    if (ch.size() > 2) {
      out.push_back({ViolationKind::TooManyChildren, where + " has " + std::to_string(ch.size()) + " children"});
      continue;
    }
    if (ch.size() == 2) {
      if (d.nodes[ch[0]].bag != node.bag || d.nodes[ch[1]].bag != node.bag)
        out.push_back({ViolationKind::JoinBagMismatch, where + " has two children with different bags"});
      if (node.kind != NodeKind::Join)
        out.push_back({ViolationKind::NodeKindMismatch, where + " has two children but kind " +
                                                            std::string(to_string(node.kind))});
      continue;
    }
    if (ch.size() == 1) {
      const auto& below = d.nodes[ch[0]].bag;
      std::vector<Vertex> extra;
      std::vector<Vertex> missing;
      std::set_difference(node.bag.begin(), node.bag.end(), below.begin(), below.end(), std::back_inserter(extra));
      std::set_difference(below.begin(), below.end(), node.bag.begin(), node.bag.end(), std::back_inserter(missing));
      if (extra.size() == 1 && missing.empty()) {
        if (node.kind != NodeKind::Introduce || node.vertex != extra[0])
          out.push_back({ViolationKind::NodeKindMismatch,
                         where + " introduces " + std::to_string(extra[0]) + " but is labelled " +
                             std::string(to_string(node.kind)) + " " + std::to_string(node.vertex)});
      } else if (missing.size() == 1 && extra.empty()) {
        if (node.kind != NodeKind::Forget || node.vertex != missing[0])
          out.push_back({ViolationKind::NodeKindMismatch,
                         where + " forgets " + std::to_string(missing[0]) + " but is labelled " +
                             std::string(to_string(node.kind)) + " " + std::to_string(node.vertex)});
      } else {
        out.push_back({ViolationKind::IntroduceForgetMismatch,
                       where + " differs from its child by " + std::to_string(extra.size()) + " added and " +
                           std::to_string(missing.size()) + " removed vertices"});
      }
      continue;
    }
    // leaf
    if (node.kind == NodeKind::BoundaryLeaf) {
      if (node.component < 0 || node.component >= static_cast<int>(d.components.size())) {
        out.push_back({ViolationKind::BoundaryLeafMismatch,
                       where + " references unknown component " + std::to_string(node.component)});
        continue;
      }
      ++boundary_leaves_of[node.component];
      if (components_ok) {
        const auto boundary = g.neighborhood(declared[node.component]).to_vector();
        if (boundary != node.bag)
          out.push_back({ViolationKind::BoundaryLeafMismatch,
                         where + " bag " + set_text(node.bag) + " differs from N(C) = " + set_text(boundary)});
      }
    } else if (node.kind == NodeKind::SimpleLeaf) {
      const bool empty_graph_leaf = n == 0 && d.num_nodes() == 1 && node.bag.empty();
      if (node.bag.size() != 1 && !empty_graph_leaf)
        out.push_back({ViolationKind::InvalidLeaf, where + " is a simple leaf with bag " + set_text(node.bag)});
    } else {
      out.push_back({ViolationKind::InvalidLeaf,
                     where + " is a leaf labelled " + std::string(to_string(node.kind))});
    }
  }
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (boundary_leaves_of[i] != 1)
      out.push_back({ViolationKind::BoundaryLeafMismatch,
                     "component " + std::to_string(i) + " has " + std::to_string(boundary_leaves_of[i]) +
                         " boundary leaves"});
  }

  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& comp = d.components[i];
    if (comp.rd.width > d.c)
      out.push_back({ViolationKind::RankWidthBudgetExceeded,
                     "component " + std::to_string(i) + " declares rank-width " + std::to_string(comp.rd.width) +
                         " > c = " + std::to_string(d.c)});
    if (check_rw && components_ok) {
      const auto sub = induced_subgraph(g, declared[i]);
      const auto check = validate_rank_decomposition(sub.graph, comp.rd);
      if (!check.violations.empty()) {
        out.push_back({ViolationKind::ComponentRankDecompositionInvalid,
                       "component " + std::to_string(i) + ": " + describe(check.violations)});
      } else if (check.width > d.c) {
        out.push_back({ViolationKind::RankWidthBudgetExceeded,
                       "component " + std::to_string(i) + " has rank-width witness " + std::to_string(check.width) +
                           " > c = " + std::to_string(d.c)});
      }
    }
  }

  const auto torso = collapse(g, x);
  const auto local = torso.from_parent(n);
  TreeDecomposition td;
  for (const auto& node : d.nodes) {
    std::vector<Vertex> bag;
    for (Vertex v : node.bag) bag.push_back(local[v]);
    td.bags.push_back(std::move(bag));
    td.children.push_back(node.children);
  }
  for (auto v : validate_tree_decomposition(torso.graph, td)) {
    v.detail += " (torso-local ids)";
    out.push_back(std::move(v));
  }

  if (d.width != d.computed_width())
    out.push_back({ViolationKind::DeclaredWidthMismatch, "declared width " + std::to_string(d.width) +
                                                             " but bags give " + std::to_string(d.computed_width())});
  return out;
}

}  // namespace rctw
