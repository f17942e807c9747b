#include "rctw/torso.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

#include "rctw/errors.hpp"
#include "rctw/validate.hpp"
#include "rctw/width.hpp"

namespace rctw {

namespace {

using Mask = std::uint32_t;

VertexSet set_of_mask(int n, Mask m) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(std::countr_zero(m));
  return s;
}

/// Calls f(mask) for every k-subset of 0..n-1 in lexicographic order of
/// sorted member lists; stops when f returns true.
template <class F>
bool for_each_subset_of_size(int n, int k, F&& f) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int v : idx) m |= Mask{1} << v;
    if (f(m)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

TorsoResult make_torso_result(const Graph& g, const VertexSet& x, int c, const TorsoLimits& limits) {
  const int n = g.num_vertices();
  if (x.universe() != n) throw InputError("modulator does not match the graph");
  if (c < 0) throw InputError("negative rank-width budget");
  TorsoResult res;
  res.modulator = x;
  res.c = c;
  for (const auto& comp : components_within(g, x)) {
    const auto sub = induced_subgraph(g, comp);
    auto rw = exact_rankwidth(sub.graph, limits.rankwidth_limit);
    if (rw.width > c)
      throw InputError("component of the modulator has rank-width " + std::to_string(rw.width) + " > c = " +
                       std::to_string(c));
    res.components.push_back({sub.to_parent, std::move(rw.rd)});
  }
  res.torso = collapse(g, x);
  auto tw = exact_treewidth(res.torso.graph, limits.treewidth_limit);
  res.torso_td = std::move(tw.td);
  res.achieved_width = tw.width;
  return res;
}

std::optional<TorsoResult> find_rc_torso(const Graph& g, int c, std::optional<int> k_max, const TorsoLimits& limits) {
  const int n = g.num_vertices();
  if (n > limits.max_vertices)
    throw ResourceError("torso search: " + std::to_string(n) + " vertices exceed the limit of " +
                            std::to_string(limits.max_vertices),
                        limits.max_vertices);
  if (n > 31) throw ResourceError("torso search: more than 31 vertices are not supported", 31);
  if (c < 0) throw InputError("negative rank-width budget");

  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::unordered_map<Mask, bool> component_ok;
  auto admissible = [&](Mask x) {
    Mask rest = x;
    while (rest != 0) {
      Mask comp = rest & (~rest + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
        next &= x & ~comp;
        comp |= next;
        frontier = next;
      }
      rest &= ~comp;
      auto it = component_ok.find(comp);
      if (it == component_ok.end()) {
        const bool ok = std::popcount(comp) == 1 || (c >= 1 && std::popcount(comp) == 2) ||
                        exact_rankwidth(induced_subgraph(g, set_of_mask(n, comp)).graph, limits.rankwidth_limit)
                                .width <= c;
        it = component_ok.emplace(comp, ok).first;
      }
      if (!it->second) return false;
    }
    return true;
  };

  std::optional<Mask> best_x;
  int best_width = 0;
  for (int size = n; size >= 0; --size) {
    const bool stop = for_each_subset_of_size(n, size, [&](Mask x) {
      if (!admissible(x)) return false;
      const Graph torso = collapse(g, set_of_mask(n, x)).graph;
      if (k_max) {
        if (treewidth_at_most(torso, *k_max, limits.treewidth_limit)) {
          best_x = x;
          return true;
        }
        return false;
      }
      if (best_x && !treewidth_at_most(torso, best_width - 1, limits.treewidth_limit)) return false;
      best_x = x;
      best_width = exact_treewidth(torso, limits.treewidth_limit).width;
      return best_width == 0;
    });
    if (stop) break;
  }
  if (!best_x) return std::nullopt;
  return make_torso_result(g, set_of_mask(n, *best_x), c, limits);
}

NiceHTreeDecomposition nicify(const Graph& g, const TorsoResult& tr) {
  const int n = g.num_vertices();
  if (tr.modulator.universe() != n) throw InputError("nicify: modulator does not match the graph");
  const auto expected = collapse(g, tr.modulator);
  if (!(expected.graph == tr.torso.graph) || expected.to_parent != tr.torso.to_parent)
    throw InputError("nicify: torso is not collapse(g, X)");
  if (auto vs = validate_tree_decomposition(tr.torso.graph, tr.torso_td); !vs.empty())
    throw InputError("nicify: invalid torso decomposition\n" + describe(vs));
  const auto comps = components_within(g, tr.modulator);
  if (comps.size() != tr.components.size()) throw InputError("nicify: component list does not match G[X]");
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (comps[i].to_vector() != tr.components[i].vertices)
      throw InputError("nicify: component " + std::to_string(i) + " does not match G[X]");

  struct Raw {
    std::vector<Vertex> bag;
    std::vector<int> children;
    int component = -1;
  };
  std::vector<Raw> raw;
  for (int t = 0; t < tr.torso_td.num_nodes(); ++t) {
    Raw r;
    for (Vertex v : tr.torso_td.bags[t]) r.bag.push_back(tr.torso.to_parent[v]);
    r.children = tr.torso_td.children[t];
    raw.push_back(std::move(r));
  }
  std::vector<int> bfs{0};
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (int ch : raw[bfs[head]].children) bfs.push_back(ch);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto boundary = g.neighborhood(comps[i]).to_vector();
    int host = -1;
    for (int t : bfs) {
      if (std::includes(raw[t].bag.begin(), raw[t].bag.end(), boundary.begin(), boundary.end())) {
        host = t;
        break;
      }
    }
    if (host == -1) throw InternalError("nicify: no bag holds the boundary of a component");
    raw.push_back({boundary, {}, static_cast<int>(i)});
    raw[host].children.push_back(static_cast<int>(raw.size()) - 1);
  }

  std::vector<NiceNode> out;
  auto add = [&](NodeKind kind, Vertex v, std::vector<Vertex> bag, std::vector<int> children) {
    out.push_back({kind, v, -1, std::move(bag), std::move(children)});
    return static_cast<int>(out.size()) - 1;
  };
  // Forget/introduce chain from node `from` up to a node with bag `want`.
  auto retarget = [&](int from, const std::vector<Vertex>& want) {
    std::vector<Vertex> bag = out[from].bag;
    int cur = from;
    std::vector<Vertex> drop;
    std::set_difference(bag.begin(), bag.end(), want.begin(), want.end(), std::back_inserter(drop));
    for (Vertex v : drop) {
      bag.erase(std::find(bag.begin(), bag.end(), v));
      cur = add(NodeKind::Forget, v, bag, {cur});
    }
    std::vector<Vertex> gain;
    std::set_difference(want.begin(), want.end(), bag.begin(), bag.end(), std::back_inserter(gain));
    for (Vertex v : gain) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
      cur = add(NodeKind::Introduce, v, bag, {cur});
    }
    return cur;
  };

  std::function<int(int)> build = [&](int r) -> int {
    const Raw& node = raw[r];
    if (node.component >= 0) {
      const int t = add(NodeKind::BoundaryLeaf, -1, node.bag, {});
      out[t].component = node.component;
      return t;
    }
    if (node.children.empty()) {
      if (node.bag.empty()) return add(NodeKind::SimpleLeaf, -1, {}, {});
      const int leaf = add(NodeKind::SimpleLeaf, node.bag[0], {node.bag[0]}, {});
      return retarget(leaf, node.bag);
    }
    int acc = -1;
    for (int ch : node.children) {
      const int sub = retarget(build(ch), node.bag);
      acc = acc == -1 ? sub : add(NodeKind::Join, -1, node.bag, {acc, sub});
    }
    return acc;
  };
  const int top = retarget(build(0), {});

  NiceHTreeDecomposition d;
  d.modulator = tr.modulator;
  d.c = tr.c;
  d.components = tr.components;
  std::vector<int> order;
  std::vector<int> stack{top};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    const auto& ch = out[t].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<int> new_id(out.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);
  for (int t : order) {
    NiceNode node = out[t];
    for (int& ch : node.children) ch = new_id[ch];
    d.nodes.push_back(std::move(node));
  }
  d.width = d.computed_width();
  return d;
}

RankDecomposition assemble_rank_decomposition(const Graph& g, const NiceHTreeDecomposition& d) {
  if (auto vs = validate_nice_h_decomposition(g, d, true); !vs.empty())
    throw InputError("assemble: invalid decomposition\n" + describe(vs));
  const int n = g.num_vertices();
  RankDecomposition rd;
  if (n == 0) return rd;

  std::vector<NiceNode> nodes = d.nodes;
  int root = 0;
  auto preorder = [&]() {
    std::vector<int> order;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int t = stack.back();
      stack.pop_back();
      order.push_back(t);
      const auto& ch = nodes[t].children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return order;
  };

  // Every torso vertex gets a simple leaf of its own; missing ones hang off
  // a new join above the topmost node holding the vertex.
  std::vector<int> mu(n, -1);
  for (int t : preorder()) {
    const auto& node = nodes[t];
    if (node.kind == NodeKind::SimpleLeaf && node.bag.size() == 1 && mu[node.bag[0]] == -1) mu[node.bag[0]] = t;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (d.modulator.contains(v) || mu[v] != -1) continue;
    std::vector<int> parent(nodes.size(), -1);
    for (std::size_t t = 0; t < nodes.size(); ++t)
      for (int ch : nodes[t].children) parent[ch] = static_cast<int>(t);
    int top = -1;
    for (int t : preorder()) {
      if (std::binary_search(nodes[t].bag.begin(), nodes[t].bag.end(), v)) {
        top = t;
        break;
      }
    }
    if (top == -1) throw InternalError("assemble: torso vertex in no bag");
    const int leaf = static_cast<int>(nodes.size());
    nodes.push_back({NodeKind::SimpleLeaf, v, -1, {v}, {}});
    const int join = static_cast<int>(nodes.size());
    nodes.push_back({NodeKind::Join, -1, -1, nodes[top].bag, {top, leaf}});
    if (parent[top] == -1) {
      root = join;
    } else {
      for (int& ch : nodes[parent[top]].children)
        if (ch == top) ch = join;
    }
    mu[v] = leaf;
  }

  struct Tmp {
    std::vector<int> children;
    Vertex vertex = -1;
  };
  std::vector<Tmp> tmp;
  std::function<int(int)> emit = [&](int t) -> int {
    const auto& node = nodes[t];
    if (node.children.empty()) {
      if (node.kind == NodeKind::BoundaryLeaf) {
        const auto& comp = d.components[node.component];
        const int base = static_cast<int>(tmp.size());
        for (const auto& cn : comp.rd.nodes) {
          Tmp copy;
          for (int ch : cn.children) copy.children.push_back(base + ch);
          if (cn.children.empty()) copy.vertex = comp.vertices[cn.vertex];
          tmp.push_back(std::move(copy));
        }
        return base;
      }
      if (node.kind == NodeKind::SimpleLeaf && node.bag.size() == 1 && mu[node.bag[0]] == t) {
        tmp.push_back({{}, node.bag[0]});
        return static_cast<int>(tmp.size()) - 1;
      }
      return -1;
    }
    std::vector<int> kept;
    for (int ch : node.children)
      if (int e = emit(ch); e != -1) kept.push_back(e);
    if (kept.empty()) return -1;
    if (kept.size() == 1) return kept[0];
    int acc = kept[0];
    for (std::size_t i = 1; i < kept.size(); ++i) {
      tmp.push_back({{acc, kept[i]}, -1});
      acc = static_cast<int>(tmp.size()) - 1;
    }
    return acc;
  };
  const int top = emit(root);
  if (top == -1) throw InternalError("assemble: no leaves kept");

  std::vector<int> order;
  std::vector<int> stack{top};
  while (!stack.empty()) {
    const int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    for (auto it = tmp[t].children.rbegin(); it != tmp[t].children.rend(); ++it) stack.push_back(*it);
  }
  std::vector<int> new_id(tmp.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) new_id[order[i]] = static_cast<int>(i);
  for (int t : order) {
    RankDecomposition::Node node;
    for (int ch : tmp[t].children) node.children.push_back(new_id[ch]);
    node.vertex = tmp[t].vertex;
    rd.nodes.push_back(std::move(node));
  }
  rd.recompute_width(g);
  return rd;
}

}  // namespace rctw
