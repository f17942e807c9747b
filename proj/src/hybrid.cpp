#include "rctw/hybrid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "rctw/certificates.hpp"
#include "rctw/errors.hpp"
#include "rctw/modulator.hpp"
#include "rctw/validate.hpp"

namespace rctw {

namespace {

using Bag = std::vector<Vertex>;

int position(const Bag& bag, Vertex v) {
  return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
}

// G[B u C] for a boundary leaf, with B as the modulator.
struct BoundaryInstance {
  Graph h;
  VertexSet x;
  std::vector<Vertex> to_parent;
};

BoundaryInstance boundary_instance(const Graph& g, const NiceHTreeDecomposition& d, const NiceNode& node,
                                   bool drop_bag_edges) {
  const auto& comp = d.components[node.component];
  VertexSet s = VertexSet::of(g.num_vertices(), comp.vertices);
  for (Vertex v : node.bag) s.insert(v);
  auto sub = induced_subgraph(g, s);
  BoundaryInstance inst;
  inst.to_parent = std::move(sub.to_parent);
  const int m = static_cast<int>(inst.to_parent.size());
  inst.x = VertexSet(m);
  VertexSet bag_set = VertexSet::of(g.num_vertices(), node.bag);
  for (int i = 0; i < m; ++i)
    if (bag_set.contains(inst.to_parent[i])) inst.x.insert(i);
  if (!drop_bag_edges) {
    inst.h = std::move(sub.graph);
  } else {
    inst.h = Graph(m);
    for (auto [a, b] : sub.graph.edges())
      if (!(inst.x.contains(a) && inst.x.contains(b))) inst.h.add_edge(a, b);
  }
  return inst;
}

void require_bag_size(const Bag& bag, int limit, const char* what) {
  if (static_cast<int>(bag.size()) > limit)
    throw ResourceError(std::string(what) + ": bag of size " + std::to_string(bag.size()) + " exceeds the limit of " +
                            std::to_string(limit),
                        limit);
}

// ---------------------------------------------------------------- chromatic

// Bag partition as a restricted growth string over bag positions.
using Partition = std::vector<std::uint8_t>;

Partition canonical(const Partition& labels) {
  Partition out(labels.size());
  std::vector<int> rename(labels.size() + 1, -1);
  int next = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (rename[labels[i]] < 0) rename[labels[i]] = next++;
    out[i] = static_cast<std::uint8_t>(rename[labels[i]]);
  }
  return out;
}

int classes(const Partition& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; }

void for_each_partition(int m, const std::function<void(const Partition&)>& f) {
  Partition p(m);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == m) {
      f(p);
      return;
    }
    for (int label = 0; label <= used; ++label) {
      p[i] = static_cast<std::uint8_t>(label);
      rec(i + 1, std::max(used, label + 1));
    }
  };
  rec(0, 0);
}

struct ColorEntry {
  int value = 0;
  int from[2] = {-1, -1};
  int join_class = -1;  // introduce: class of the new vertex in the child key, -1 for a new class
  int solution = -1;    // boundary leaf: index into ColorTable::solutions
};

struct ColorTable {
  std::map<Partition, int> index;
  std::vector<Partition> keys;
  std::vector<ColorEntry> entries;
  std::vector<std::vector<int>> solutions;  // boundary colorings over to_parent
  std::vector<Vertex> to_parent;

  void offer(const Partition& key, const ColorEntry& e) {
    auto [it, fresh] = index.emplace(key, static_cast<int>(entries.size()));
    if (fresh) {
      keys.push_back(key);
      entries.push_back(e);
    } else if (e.value < entries[it->second].value) {
      entries[it->second] = e;
    }
  }
};

bool proper_on_bag(const Graph& g, const Bag& bag, const Partition& p) {
  for (std::size_t i = 0; i < bag.size(); ++i)
    for (std::size_t j = i + 1; j < bag.size(); ++j)
      if (p[i] == p[j] && g.has_edge(bag[i], bag[j])) return false;
  return true;
}

class ChromaticDp {
 public:
  ChromaticDp(const Graph& g, const NiceHTreeDecomposition& d) : g_(g), d_(d), tables_(d.num_nodes()) {}

  ChromaticSolution run() {
    ChromaticSolution out;
    const int n = g_.num_vertices();
    if (d_.num_nodes() == 0) return out;
    for (int t : d_.postorder()) build(t);
    const auto& root = tables_[0];
    int best = -1;
    for (int i = 0; i < static_cast<int>(root.entries.size()); ++i)
      if (best < 0 || root.entries[i].value < root.entries[best].value) best = i;
    if (best < 0) throw InternalError("chromatic: empty root record");
    out.colors = root.entries[best].value;
    out.coloring = realize(0, best);
    for (int& col : out.coloring)
      if (col < 0) throw InternalError("chromatic: witness leaves a vertex uncolored");
    // Compact the palette to 0..colors-1.
    std::map<int, int> rename;
    for (int& col : out.coloring) col = rename.emplace(col, static_cast<int>(rename.size())).first->second;
    if (check_coloring(g_, out.coloring) != out.colors || static_cast<int>(out.coloring.size()) != n)
      throw InternalError("chromatic: witness does not certify the optimum");
    return out;
  }

 private:
  void build(int t) {
    const NiceNode& node = d_.nodes[t];
    ColorTable& table = tables_[t];
    require_bag_size(node.bag, 12, "chromatic");
    switch (node.kind) {
      case NodeKind::SimpleLeaf: {
        ColorEntry e;
        e.value = node.bag.empty() ? 0 : 1;
        table.offer(Partition(node.bag.size(), 0), e);
        break;
      }
      case NodeKind::BoundaryLeaf: {
        auto inst = boundary_instance(g_, d_, node, false);
        table.to_parent = inst.to_parent;
        const auto& comp = d_.components[node.component];
        const auto local = [&](int pos) {
          return static_cast<int>(std::lower_bound(inst.to_parent.begin(), inst.to_parent.end(), node.bag[pos]) -
                                  inst.to_parent.begin());
        };
        for_each_partition(static_cast<int>(node.bag.size()), [&](const Partition& p) {
          if (!proper_on_bag(g_, node.bag, p)) return;
          std::vector<int> precolor(inst.h.num_vertices(), -1);
          for (std::size_t i = 0; i < node.bag.size(); ++i) precolor[local(static_cast<int>(i))] = p[i];
          auto res = precoloring_extension(inst.h, inst.x, precolor, comp.rd, d_.c);
          ColorEntry e;
          e.value = res.colors;
          e.solution = static_cast<int>(table.solutions.size());
          table.solutions.push_back(std::move(res.coloring));
          table.offer(p, e);
        });
        break;
      }
      case NodeKind::Introduce: {
        const ColorTable& child = tables_[node.children[0]];
        const Bag& cbag = d_.nodes[node.children[0]].bag;
        const int pv = position(node.bag, node.vertex);
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          const Partition& key = child.keys[i];
          const int k = classes(key);
          const int value = child.entries[i].value;
          for (int cls = 0; cls <= k; ++cls) {
            if (cls < k) {
              bool independent = true;
              for (std::size_t j = 0; j < cbag.size() && independent; ++j)
                if (key[j] == cls && g_.has_edge(node.vertex, cbag[j])) independent = false;
              if (!independent) continue;
            }
            Partition labels(key);
            labels.insert(labels.begin() + pv, static_cast<std::uint8_t>(cls));
            ColorEntry e;
            e.from[0] = i;
            e.join_class = cls < k ? cls : -1;
            e.value = cls < k || value > k ? value : value + 1;
            table.offer(canonical(labels), e);
          }
        }
        break;
      }
      case NodeKind::Forget: {
        const ColorTable& child = tables_[node.children[0]];
        const int pv = position(d_.nodes[node.children[0]].bag, node.vertex);
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          Partition labels(child.keys[i]);
          labels.erase(labels.begin() + pv);
          ColorEntry e;
          e.from[0] = i;
          e.value = child.entries[i].value;
          table.offer(canonical(labels), e);
        }
        break;
      }
      case NodeKind::Join: {
        const ColorTable& left = tables_[node.children[0]];
        const ColorTable& right = tables_[node.children[1]];
        for (int i = 0; i < static_cast<int>(left.entries.size()); ++i) {
          auto it = right.index.find(left.keys[i]);
          if (it == right.index.end()) continue;
          ColorEntry e;
          e.from[0] = i;
          e.from[1] = it->second;
          // Colors absent from the bag can be shared between the two sides.
          e.value = std::max(left.entries[i].value, right.entries[it->second].value);
          table.offer(left.keys[i], e);
        }
        break;
      }
    }
  }

  // Coloring of Y_t (-1 outside) whose restriction to the bag induces the
  // key partition and which uses exactly the entry's value many colors.
  std::vector<int> realize(int t, int idx) const {
    const NiceNode& node = d_.nodes[t];
    const ColorTable& table = tables_[t];
    const ColorEntry& e = table.entries[idx];
    std::vector<int> col(g_.num_vertices(), -1);
    switch (node.kind) {
      case NodeKind::SimpleLeaf:
        for (Vertex v : node.bag) col[v] = 0;
        break;
      case NodeKind::BoundaryLeaf: {
        const auto& sol = table.solutions[e.solution];
        for (std::size_t i = 0; i < sol.size(); ++i) col[table.to_parent[i]] = sol[i];
        break;
      }
      case NodeKind::Introduce: {
        const int child = node.children[0];
        col = realize(child, e.from[0]);
        const Bag& cbag = d_.nodes[child].bag;
        const Partition& key = tables_[child].keys[e.from[0]];
        if (e.join_class >= 0) {
          for (std::size_t j = 0; j < cbag.size(); ++j)
            if (key[j] == e.join_class) col[node.vertex] = col[cbag[j]];
        } else {
          std::set<int> on_bag, used;
          for (Vertex u : cbag) on_bag.insert(col[u]);
          for (int x : col)
            if (x >= 0) used.insert(x);
          int pick = used.empty() ? 0 : *used.rbegin() + 1;
          if (e.value == tables_[child].entries[e.from[0]].value) {
            for (int x : used)
              if (!on_bag.count(x)) {
                pick = x;
                break;
              }
          }
          col[node.vertex] = pick;
        }
        break;
      }
      case NodeKind::Forget:
        col = realize(node.children[0], e.from[0]);
        break;
      case NodeKind::Join: {
        col = realize(node.children[0], e.from[0]);
        const auto other = realize(node.children[1], e.from[1]);
        std::map<int, int> rename;
        std::set<int> taken;
        for (Vertex u : node.bag) {
          rename[other[u]] = col[u];
          taken.insert(col[u]);
        }
        std::set<int> spare;
        int top = 0;
        for (int x : col)
          if (x >= 0) {
            if (!taken.count(x)) spare.insert(x);
            top = std::max(top, x + 1);
          }
        for (int x : other) {
          if (x < 0 || rename.count(x)) continue;
          if (!spare.empty()) {
            rename[x] = *spare.begin();
            spare.erase(spare.begin());
          } else {
            rename[x] = top++;
          }
        }
        for (Vertex v = 0; v < g_.num_vertices(); ++v)
          if (other[v] >= 0) col[v] = rename[other[v]];
        break;
      }
    }
    return col;
  }

  const Graph& g_;
  const NiceHTreeDecomposition& d_;
  std::vector<ColorTable> tables_;
};

// ---------------------------------------------------------------- max-cut

std::uint32_t insert_bit(std::uint32_t mask, int p, std::uint32_t bit) {
  const std::uint32_t low = mask & ((std::uint32_t{1} << p) - 1);
  return low | (bit << p) | ((mask >> p) << (p + 1));
}

std::uint32_t remove_bit(std::uint32_t mask, int p) {
  const std::uint32_t low = mask & ((std::uint32_t{1} << p) - 1);
  return low | ((mask >> (p + 1)) << p);
}

int cut_within(const Graph& g, const Bag& bag, std::uint32_t mask) {
  int cut = 0;
  for (std::size_t i = 0; i < bag.size(); ++i)
    for (std::size_t j = i + 1; j < bag.size(); ++j)
      if ((mask >> i & 1) != (mask >> j & 1) && g.has_edge(bag[i], bag[j])) ++cut;
  return cut;
}

struct CutTable {
  std::vector<int> value;
  std::vector<std::uint8_t> choice;  // forget: side of the forgotten vertex
  std::vector<VertexSet> sides;      // boundary leaf: side over to_parent
  std::vector<Vertex> to_parent;
};

class MaxCutDp {
 public:
  MaxCutDp(const Graph& g, const NiceHTreeDecomposition& d) : g_(g), d_(d), tables_(d.num_nodes()) {}

  MaxCutSolution run() {
    MaxCutSolution out;
    out.side = g_.empty_set();
    if (d_.num_nodes() == 0) return out;
    for (int t : d_.postorder()) build(t);
    const auto& root = tables_[0].value;
    const auto best = static_cast<std::uint32_t>(std::max_element(root.begin(), root.end()) - root.begin());
    out.value = root[best];
    std::vector<std::pair<int, std::uint32_t>> stack{{0, best}};
    while (!stack.empty()) {
      auto [t, mask] = stack.back();
      stack.pop_back();
      const NiceNode& node = d_.nodes[t];
      for (std::size_t i = 0; i < node.bag.size(); ++i)
        if (mask >> i & 1) out.side.insert(node.bag[i]);
      switch (node.kind) {
        case NodeKind::SimpleLeaf:
          break;
        case NodeKind::BoundaryLeaf: {
          const CutTable& table = tables_[t];
          table.sides[mask].for_each([&](Vertex v) { out.side.insert(table.to_parent[v]); });
          break;
        }
        case NodeKind::Introduce:
          stack.emplace_back(node.children[0], remove_bit(mask, position(node.bag, node.vertex)));
          break;
        case NodeKind::Forget: {
          const int pv = position(d_.nodes[node.children[0]].bag, node.vertex);
          stack.emplace_back(node.children[0], insert_bit(mask, pv, tables_[t].choice[mask]));
          break;
        }
        case NodeKind::Join:
          stack.emplace_back(node.children[0], mask);
          stack.emplace_back(node.children[1], mask);
          break;
      }
    }
    if (cut_size(g_, out.side) != out.value) throw InternalError("max-cut: witness does not certify the optimum");
    return out;
  }

 private:
  void build(int t) {
    const NiceNode& node = d_.nodes[t];
    CutTable& table = tables_[t];
    require_bag_size(node.bag, 20, "max-cut");
    const std::uint32_t size = std::uint32_t{1} << node.bag.size();
    table.value.assign(size, 0);
    switch (node.kind) {
      case NodeKind::SimpleLeaf:
        break;
      case NodeKind::BoundaryLeaf: {
        auto inst = boundary_instance(g_, d_, node, false);
        table.to_parent = inst.to_parent;
        const auto xs = inst.x.to_vector();
        const auto& rd = d_.components[node.component].rd;
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          VertexSet s(inst.h.num_vertices());
          for (std::size_t i = 0; i < xs.size(); ++i)
            if (mask >> i & 1) s.insert(xs[i]);
          auto res = maxcut_extension(inst.h, inst.x, s, rd, d_.c);
          table.value[mask] = res.value;
          table.sides.push_back(std::move(res.side));
        }
        break;
      }
      case NodeKind::Introduce: {
        const auto& child = tables_[node.children[0]].value;
        const int pv = position(node.bag, node.vertex);
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          const std::uint32_t own = mask >> pv & 1;
          int gain = 0;
          for (std::size_t i = 0; i < node.bag.size(); ++i)
            if (static_cast<int>(i) != pv && (mask >> i & 1) != own && g_.has_edge(node.vertex, node.bag[i])) ++gain;
          table.value[mask] = child[remove_bit(mask, pv)] + gain;
        }
        break;
      }
      case NodeKind::Forget: {
        const auto& child = tables_[node.children[0]].value;
        const int pv = position(d_.nodes[node.children[0]].bag, node.vertex);
        table.choice.assign(size, 0);
        for (std::uint32_t mask = 0; mask < size; ++mask) {
          const int a = child[insert_bit(mask, pv, 0)];
          const int b = child[insert_bit(mask, pv, 1)];
          table.value[mask] = std::max(a, b);
          table.choice[mask] = b > a;
        }
        break;
      }
      case NodeKind::Join: {
        const auto& left = tables_[node.children[0]].value;
        const auto& right = tables_[node.children[1]].value;
        for (std::uint32_t mask = 0; mask < size; ++mask)
          table.value[mask] = left[mask] + right[mask] - cut_within(g_, node.bag, mask);
        break;
      }
    }
  }

  const Graph& g_;
  const NiceHTreeDecomposition& d_;
  std::vector<CutTable> tables_;
};

// ---------------------------------------------------------------- Hamiltonian

// Partial path system on a bag: per position 0 (degree 0), 1 (degree 2) or
// 2 + q (degree 1, the fragment's other end sits at position q). The last
// byte is 1 once the system has closed into a cycle.
using PathState = std::vector<std::uint8_t>;

int degree_at(const PathState& s, int p) { return s[p] == 0 ? 0 : s[p] == 1 ? 2 : 1; }
bool is_closed(const PathState& s) { return s.back() != 0; }

// Adds an edge between bag positions a and b. Closing a cycle is allowed
// only when it leaves every bag position with degree 2.
bool add_edge(PathState& s, int a, int b) {
  if (is_closed(s) || a == b) return false;
  const int da = degree_at(s, a);
  const int db = degree_at(s, b);
  if (da == 2 || db == 2) return false;
  const int bag = static_cast<int>(s.size()) - 1;
  if (da == 1 && s[a] - 2 == b) {
    s[a] = s[b] = 1;
    for (int p = 0; p < bag; ++p)
      if (s[p] != 1) return false;
    s.back() = 1;
    return true;
  }
  const int ea = da == 0 ? a : s[a] - 2;
  const int eb = db == 0 ? b : s[b] - 2;
  s[a] = da == 1 ? 1 : static_cast<std::uint8_t>(2 + eb);
  s[b] = db == 1 ? 1 : static_cast<std::uint8_t>(2 + ea);
  if (ea != a) s[ea] = static_cast<std::uint8_t>(2 + eb);
  if (eb != b) s[eb] = static_cast<std::uint8_t>(2 + ea);
  return true;
}

PathState drop_position(const PathState& s, int p) {
  PathState out;
  out.reserve(s.size() - 1);
  const int bag = static_cast<int>(s.size()) - 1;
  for (int q = 0; q < bag; ++q) {
    if (q == p) continue;
    std::uint8_t code = s[q];
    if (code >= 2 && code - 2 > p) --code;
    out.push_back(code);
  }
  out.push_back(s.back());
  return out;
}

struct PathEntry {
  int from[2] = {-1, -1};
  std::vector<Edge> edges;  // g-edges realized at this step
};

struct PathTable {
  std::map<PathState, int> index;
  std::vector<PathState> keys;
  std::vector<PathEntry> entries;
  int source[2] = {-1, -1};  // tables the entries' `from` indices refer to

  bool contains(const PathState& key) const { return index.count(key) != 0; }
  void offer(const PathState& key, PathEntry e) {
    if (index.emplace(key, static_cast<int>(entries.size())).second) {
      keys.push_back(key);
      entries.push_back(std::move(e));
    }
  }
};

// Vertex order for the rank decomposition of G[C] minus the leaf of `label`.
RankDecomposition remove_leaf(const RankDecomposition& rd, int label) {
  const auto parent = rd.parents();
  int leaf = -1;
  for (int t = 0; t < rd.num_nodes(); ++t)
    if (rd.is_leaf(t) && rd.nodes[t].vertex == label) leaf = t;
  if (leaf < 0) throw InternalError("hamiltonian: leaf missing from component decomposition");
  const int p = parent[leaf];
  int sibling = -1;
  for (int ch : rd.nodes[p].children)
    if (ch != leaf) sibling = ch;
  RankDecomposition out;
  // Copy the tree, skipping `p` by linking its sibling in its place.
  std::function<int(int)> copy = [&](int t) -> int {
    if (t == p) return copy(sibling);
    const int id = static_cast<int>(out.nodes.size());
    out.nodes.emplace_back();
    if (rd.is_leaf(t)) {
      const int v = rd.nodes[t].vertex;
      out.nodes[id].vertex = v > label ? v - 1 : v;
    } else {
      for (int ch : rd.nodes[t].children) {
        const int c = copy(ch);
        out.nodes[id].children.push_back(c);
      }
    }
    return id;
  };
  copy(0);
  return out;
}

class HamiltonianDp {
 public:
  HamiltonianDp(const Graph& g, const NiceHTreeDecomposition& d) : g_(g), d_(d), tables_(d.num_nodes()) {}

  HamiltonianSolution run() {
    HamiltonianSolution out;
    const int n = g_.num_vertices();
    if (n < 3 || d_.num_nodes() == 0) return out;
    for (int t : d_.postorder()) build(t);
    // Forget whatever remains in the root bag.
    int top = 0;
    Bag bag = d_.nodes[0].bag;
    while (!bag.empty()) {
      PathTable next;
      next.source[0] = top;
      forget(bag, static_cast<int>(bag.size()) - 1, tables_[top], next);
      bag.pop_back();
      tables_.push_back(std::move(next));
      top = static_cast<int>(tables_.size()) - 1;
    }
    // With the bag empty, the only possible keys are {0} and {1}.
    const PathTable& final = tables_[top];
    int closed = -1;
    for (int i = 0; i < static_cast<int>(final.keys.size()); ++i)
      if (is_closed(final.keys[i])) closed = i;
    if (closed < 0) return out;

    std::vector<Edge> edges;
    collect(top, closed, edges);
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v)
      if (adj[v].size() != 2) throw InternalError("hamiltonian: witness edge set is not 2-regular");
    Vertex prev = -1, at = 0;
    for (int i = 0; i < n; ++i) {
      out.cycle.push_back(at);
      const Vertex next = adj[at][0] != prev ? adj[at][0] : adj[at][1];
      prev = at;
      at = next;
    }
    if (!check_hamiltonian_cycle(g_, out.cycle)) throw InternalError("hamiltonian: witness is not a Hamiltonian cycle");
    out.exists = true;
    return out;
  }

 private:
  // Forgets bag[pv]: picks its remaining edges into the rest of the bag.
  void forget(const Bag& bag, int pv, const PathTable& child, PathTable& out) const {
    const Vertex v = bag[pv];
    std::vector<int> nb;
    for (int q = 0; q < static_cast<int>(bag.size()); ++q)
      if (q != pv && g_.has_edge(v, bag[q])) nb.push_back(q);
    for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
      const PathState& key = child.keys[i];
      const int need = 2 - degree_at(key, pv);
      auto emit = [&](const std::vector<int>& picks) {
        PathState s(key);
        PathEntry e;
        e.from[0] = i;
        for (int q : picks) {
          if (!add_edge(s, pv, q)) return;
          e.edges.emplace_back(v, bag[q]);
        }
        if (degree_at(s, pv) != 2) return;
        out.offer(drop_position(s, pv), std::move(e));
      };
      if (need == 0) {
        emit({});
      } else if (need == 1) {
        for (int q : nb) emit({q});
      } else {
        for (std::size_t a = 0; a < nb.size(); ++a)
          for (std::size_t b = a + 1; b < nb.size(); ++b) emit({nb[a], nb[b]});
      }
    }
  }

  void build(int t) {
    const NiceNode& node = d_.nodes[t];
    PathTable& table = tables_[t];
    require_bag_size(node.bag, 10, "hamiltonian");
    for (std::size_t i = 0; i < node.children.size(); ++i) table.source[i] = node.children[i];
    switch (node.kind) {
      case NodeKind::SimpleLeaf:
        table.offer(PathState(node.bag.size() + 1, 0), {});
        break;
      case NodeKind::BoundaryLeaf:
        boundary(node, table);
        break;
      case NodeKind::Introduce: {
        const PathTable& child = tables_[node.children[0]];
        const int pv = position(node.bag, node.vertex);
        for (int i = 0; i < static_cast<int>(child.entries.size()); ++i) {
          const PathState& key = child.keys[i];
          if (is_closed(key)) continue;
          PathState s;
          const int cb = static_cast<int>(key.size()) - 1;
          for (int q = 0; q < cb; ++q) {
            if (q == pv) s.push_back(0);
            std::uint8_t code = key[q];
            if (code >= 2 && code - 2 >= pv) ++code;
            s.push_back(code);
          }
          if (pv == cb) s.push_back(0);
          s.push_back(0);
          PathEntry e;
          e.from[0] = i;
          table.offer(s, std::move(e));
        }
        break;
      }
      case NodeKind::Forget: {
        const Bag& cbag = d_.nodes[node.children[0]].bag;
        forget(cbag, position(cbag, node.vertex), tables_[node.children[0]], table);
        break;
      }
      case NodeKind::Join: {
        const PathTable& left = tables_[node.children[0]];
        const PathTable& right = tables_[node.children[1]];
        for (int i = 0; i < static_cast<int>(left.entries.size()); ++i)
          for (int j = 0; j < static_cast<int>(right.entries.size()); ++j) {
            auto merged = combine(left.keys[i], right.keys[j]);
            if (!merged) continue;
            PathEntry e;
            e.from[0] = i;
            e.from[1] = j;
            table.offer(*merged, std::move(e));
          }
        break;
      }
    }
  }

  static std::optional<PathState> combine(PathState a, PathState b) {
    if (is_closed(a) && is_closed(b)) return std::nullopt;
    if (is_closed(b)) std::swap(a, b);
    const int bag = static_cast<int>(a.size()) - 1;
    if (is_closed(a)) {
      for (int p = 0; p < bag; ++p)
        if (b[p] != 0) return std::nullopt;
      return a;
    }
    for (int p = 0; p < bag; ++p)
      if (b[p] == 1) {
        if (a[p] != 0) return std::nullopt;
        a[p] = 1;
      }
    for (int p = 0; p < bag; ++p)
      if (b[p] >= 2 && b[p] - 2 > p && !add_edge(a, p, b[p] - 2)) return std::nullopt;
    return a;
  }

  void boundary(const NiceNode& node, PathTable& table) {
    const auto& comp = d_.components[node.component];
    const int m = static_cast<int>(node.bag.size());
    if (m <= 1) {
      split_boundary(node, comp, table);
      return;
    }
    auto inst = boundary_instance(g_, d_, node, true);
    const auto xs = inst.x.to_vector();  // bag positions -> local ids
    // Multigraphs Q on the bag: edge multiplicities over position pairs.
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) pairs.emplace_back(a, b);
    std::vector<int> mult(pairs.size(), 0);
    std::vector<int> deg(m, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int edges) {
      if (i == pairs.size()) {
        if (edges == 0) return;
        PathState s(m + 1, 0);
        std::vector<Edge> q;
        for (std::size_t j = 0; j < pairs.size(); ++j)
          for (int r = 0; r < mult[j]; ++r) {
            if (!add_edge(s, pairs[j].first, pairs[j].second)) return;
            q.emplace_back(xs[pairs[j].first], xs[pairs[j].second]);
          }
        if (table.contains(s)) return;
        auto res = disjoint_paths_cover(inst.h, inst.x, q, comp.rd, d_.c);
        if (!res.feasible) return;
        PathEntry e;
        for (const auto& path : res.paths)
          for (std::size_t k = 0; k + 1 < path.size(); ++k)
            e.edges.emplace_back(inst.to_parent[path[k]], inst.to_parent[path[k + 1]]);
        table.offer(s, std::move(e));
        return;
      }
      const auto [a, b] = pairs[i];
      for (int r = 0; r <= 2 && edges + r <= m && deg[a] + r <= 2 && deg[b] + r <= 2; ++r) {
        mult[i] = r;
        deg[a] += r;
        deg[b] += r;
        rec(i + 1, edges + r);
        deg[a] -= r;
        deg[b] -= r;
      }
      mult[i] = 0;
    };
    rec(0, 0);
  }

  // |B| <= 1: the record is a Hamiltonian cycle of G[Y_t]. A vertex u is
  // split into u and u' and the cycle becomes a u-u' path covering the rest.
  void split_boundary(const NiceNode& node, const ModulatorComponent& comp, PathTable& table) {
    std::vector<Vertex> rest = comp.vertices;
    RankDecomposition rd = comp.rd;
    Vertex u;
    if (node.bag.size() == 1) {
      u = node.bag[0];
    } else {
      u = rest[0];
      if (rest.size() < 3) return;
      rest.erase(rest.begin());
      rd = remove_leaf(comp.rd, 0);
    }
    if (rest.size() < 2) return;
    const int r = static_cast<int>(rest.size());
    Graph h(r + 2);
    for (int i = 0; i < r; ++i) {
      for (int j = i + 1; j < r; ++j)
        if (g_.has_edge(rest[i], rest[j])) h.add_edge(i, j);
      if (g_.has_edge(u, rest[i])) {
        h.add_edge(i, r);
        h.add_edge(i, r + 1);
      }
    }
    if (node.bag.empty()) rd.recompute_width(induced_subgraph(g_, VertexSet::of(g_.num_vertices(), rest)).graph);
    const VertexSet x = VertexSet::of(r + 2, {r, r + 1});
    auto res = disjoint_paths_cover(h, x, {{r, r + 1}}, rd, d_.c);
    if (!res.feasible) return;
    auto to_global = [&](Vertex local) { return local >= r ? u : rest[local]; };
    PathEntry e;
    const auto& path = res.paths[0];
    for (std::size_t k = 0; k + 1 < path.size(); ++k) e.edges.emplace_back(to_global(path[k]), to_global(path[k + 1]));
    PathState s(node.bag.size() + 1, 1);
    table.offer(s, std::move(e));
  }

  void collect(int table_id, int idx, std::vector<Edge>& edges) const {
    const PathTable& table = tables_[table_id];
    const PathEntry& e = table.entries[idx];
    edges.insert(edges.end(), e.edges.begin(), e.edges.end());
    for (int i = 0; i < 2; ++i)
      if (e.from[i] >= 0) collect(table.source[i], e.from[i], edges);
  }

  const Graph& g_;
  const NiceHTreeDecomposition& d_;
  std::vector<PathTable> tables_;
};

}  // namespace

void require_valid_decomposition(const Graph& g, const NiceHTreeDecomposition& d) {
  const auto violations = validate_nice_h_decomposition(g, d, false);
  if (!violations.empty()) throw InputError("invalid decomposition: " + describe(violations));
}

ChromaticSolution solve_chromatic(const Graph& g, const NiceHTreeDecomposition& d) {
  require_valid_decomposition(g, d);
  return ChromaticDp(g, d).run();
}

HamiltonianSolution solve_hamiltonian(const Graph& g, const NiceHTreeDecomposition& d) {
  require_valid_decomposition(g, d);
  return HamiltonianDp(g, d).run();
}

MaxCutSolution solve_maxcut(const Graph& g, const NiceHTreeDecomposition& d) {
  require_valid_decomposition(g, d);
  return MaxCutDp(g, d).run();
}

}  // namespace rctw
