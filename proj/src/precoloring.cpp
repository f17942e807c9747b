#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "rctw/errors.hpp"
#include "rctw/modulator.hpp"
#include "rctw/twins.hpp"

namespace rctw {

namespace {

using Slots = std::uint8_t;  // subset of the z <= 8 class slots

// b[i]: slots holding modulator color i; d: sorted slot sets of the fresh
// colors used below the node.
struct Key {
  std::vector<Slots> b;
  std::vector<Slots> d;
  auto operator<=>(const Key&) const = default;
};

struct Origin {
  int left = -1;  // child key indices; -1 at leaves
  int right = -1;
  std::vector<int> left_to;  // d position of each child fresh color
  std::vector<int> right_to;
  int leaf_color = -1;       // modulator color index at leaves, -1 for fresh
};

struct NodeTable {
  std::map<Key, int> index;
  std::vector<Key> keys;
  std::vector<Origin> origins;

  bool add(Key key, Origin origin) {
    auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(keys.size()));
    if (!fresh) return false;
    keys.push_back(it->first);
    origins.push_back(std::move(origin));
    return true;
  }
};

Slots lift(Slots m, const std::vector<int>& up) {
  Slots out = 0;
  for (int j = 0; m != 0; ++j, m >>= 1)
    if ((m & 1) && up[j] >= 0) out |= static_cast<Slots>(1u << up[j]);
  return out;
}

/// Colors used by a first-fit extension; every key above this many colors
/// can be discarded since color counts never shrink towards the root.
int greedy_bound(const Graph& g, const VertexSet& x, const std::vector<int>& precolor) {
  const int n = g.num_vertices();
  std::vector<int> color(n, -1);
  std::vector<char> used(2 * n + 1, 0);
  x.for_each([&](Vertex v) {
    color[v] = precolor[v];
    used[precolor[v]] = 1;
  });
  for (Vertex v = 0; v < n; ++v) {
    if (x.contains(v)) continue;
    std::vector<char> blocked(2 * n + 1, 0);
    g.neighbors(v).for_each([&](Vertex w) {
      if (color[w] >= 0) blocked[color[w]] = 1;
    });
    int pick = 0;
    while (blocked[pick]) ++pick;
    color[v] = pick;
    used[pick] = 1;
  }
  return static_cast<int>(std::count(used.begin(), used.end(), 1));
}

}  // namespace

PrecoloringResult precoloring_extension(const Graph& g, const VertexSet& x, const std::vector<int>& precolor,
                                        const RankDecomposition& rd, int c) {
  const int n = g.num_vertices();
  if (x.universe() != n) throw InputError("precoloring: modulator does not match the graph");
  if (static_cast<int>(precolor.size()) != n) throw InputError("precoloring: one entry per vertex expected");
  const int k = x.size();
  x.for_each([&](Vertex v) {
    if (precolor[v] < 0 || precolor[v] >= k)
      throw InputError("precoloring: color of vertex " + std::to_string(v) + " outside [0, |X|)");
  });
  for (auto [u, v] : g.edges())
    if (x.contains(u) && x.contains(v) && precolor[u] == precolor[v])
      throw InputError("precoloring: adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) +
                       " share a color");
  const TwinContext ctx = build_twin_context(g, x, rd, c);

  std::vector<int> palette;  // colors present on X
  x.for_each([&](Vertex v) { palette.push_back(precolor[v]); });
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  const int p = static_cast<int>(palette.size());

  PrecoloringResult res;
  res.coloring.assign(n, -1);
  x.for_each([&](Vertex v) { res.coloring[v] = precolor[v]; });
  if (ctx.num_nodes() == 0) {
    res.colors = p;
    return res;
  }

  const int bound = greedy_bound(g, x, precolor) - p;  // fresh colors allowed
  const int z = ctx.z;
  std::vector<NodeTable> table(ctx.num_nodes());
  for (int t : rd.postorder()) {
    auto& here = table[t];
    if (rd.is_leaf(t)) {
      const Vertex v = ctx.rest[rd.nodes[t].vertex];
      for (int i = 0; i < p; ++i) {
        bool free = true;
        (g.neighbors(v) & x).for_each([&](Vertex w) { free = free && precolor[w] != palette[i]; });
        if (!free) continue;
        Key key{std::vector<Slots>(p, 0), {}};
        key.b[i] = 1;
        Origin o;
        o.leaf_color = i;
        here.add(std::move(key), std::move(o));
      }
      if (bound >= 1) here.add(Key{std::vector<Slots>(p, 0), {1}}, Origin{});
      continue;
    }
    const int t1 = rd.nodes[t].children[0];
    const int t2 = rd.nodes[t].children[1];
    const auto link = link_matrix(ctx, t1, t2);
    const auto up1 = lift_map(ctx, t1, t);
    const auto up2 = lift_map(ctx, t2, t);
    std::vector<Slots> reach(z, 0);  // reach[j1]: child-2 slots complete to slot j1
    for (int j1 = 0; j1 < z; ++j1)
      for (int j2 = 0; j2 < z; ++j2)
        if (link[j1 * z + j2]) reach[j1] |= static_cast<Slots>(1u << j2);
    auto clash = [&](Slots m1, Slots m2) {
      for (int j = 0; m1 != 0; ++j, m1 >>= 1)
        if ((m1 & 1) && (reach[j] & m2)) return true;
      return false;
    };

    const auto& left = table[t1];
    const auto& right = table[t2];
    for (int a = 0; a < static_cast<int>(left.keys.size()); ++a) {
      const Key& k1 = left.keys[a];
      for (int b = 0; b < static_cast<int>(right.keys.size()); ++b) {
        const Key& k2 = right.keys[b];
        bool ok = true;
        std::vector<Slots> merged_b(p);
        for (int i = 0; i < p && ok; ++i) {
          ok = !clash(k1.b[i], k2.b[i]);
          merged_b[i] = lift(k1.b[i], up1) | lift(k2.b[i], up2);
        }
        if (!ok) continue;
        const int s1 = static_cast<int>(k1.d.size());
        const int s2 = static_cast<int>(k2.d.size());
        // Partial matchings between the fresh colors of the two children.
        std::vector<int> match(s1, -1);
        std::vector<char> taken(s2, 0);
        auto emit = [&]() {
          std::vector<std::pair<Slots, int>> items;  // (slots, origin tag)
          int matched = 0;
          for (int i = 0; i < s1; ++i) {
            Slots m = lift(k1.d[i], up1);
            if (match[i] >= 0) {
              m |= lift(k2.d[match[i]], up2);
              ++matched;
            }
            items.emplace_back(m, i);
          }
          for (int j = 0; j < s2; ++j)
            if (!taken[j]) items.emplace_back(lift(k2.d[j], up2), s1 + j);
          if (s1 + s2 - matched > bound) return;
          std::stable_sort(items.begin(), items.end(),
                           [](const auto& l, const auto& r) { return l.first < r.first; });
          Origin o;
          o.left = a;
          o.right = b;
          o.left_to.assign(s1, -1);
          o.right_to.assign(s2, -1);
          Key key{merged_b, {}};
          for (std::size_t pos = 0; pos < items.size(); ++pos) {
            key.d.push_back(items[pos].first);
            const int tag = items[pos].second;
            if (tag < s1) {
              o.left_to[tag] = static_cast<int>(pos);
              if (match[tag] >= 0) o.right_to[match[tag]] = static_cast<int>(pos);
            } else {
              o.right_to[tag - s1] = static_cast<int>(pos);
            }
          }
          table[t].add(std::move(key), std::move(o));
        };
        auto recurse = [&](auto&& self, int i) -> void {
          if (i == s1) {
            emit();
            return;
          }
          match[i] = -1;
          self(self, i + 1);
          for (int j = 0; j < s2; ++j) {
            if (taken[j] || clash(k1.d[i], k2.d[j])) continue;
            bool duplicate = false;  // equal free partners give equal keys
            for (int jj = 0; jj < j && !duplicate; ++jj) duplicate = !taken[jj] && k2.d[jj] == k2.d[j];
            if (duplicate) continue;
            taken[j] = 1;
            match[i] = j;
            self(self, i + 1);
            taken[j] = 0;
            match[i] = -1;
          }
        };
        recurse(recurse, 0);
      }
    }
  }

  const auto& root = table[0];
  if (root.keys.empty()) throw InternalError("precoloring: no root state");
  int best = 0;
  for (int i = 1; i < static_cast<int>(root.keys.size()); ++i)
    if (root.keys[i].d.size() < root.keys[best].d.size()) best = i;
  res.colors = p + static_cast<int>(root.keys[best].d.size());

  struct Frame {
    int node;
    int key;
    std::vector<int> fresh;  // color of each fresh entry of the key
  };
  std::vector<int> top(root.keys[best].d.size());
  std::iota(top.begin(), top.end(), k);
  std::vector<Frame> stack{{0, best, top}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const Origin& o = table[f.node].origins[f.key];
    if (rd.is_leaf(f.node)) {
      const Vertex v = ctx.rest[rd.nodes[f.node].vertex];
      res.coloring[v] = o.leaf_color >= 0 ? palette[o.leaf_color] : f.fresh.at(0);
      continue;
    }
    std::vector<int> fresh1, fresh2;
    for (int pos : o.left_to) fresh1.push_back(f.fresh[pos]);
    for (int pos : o.right_to) fresh2.push_back(f.fresh[pos]);
    stack.push_back({rd.nodes[f.node].children[0], o.left, std::move(fresh1)});
    stack.push_back({rd.nodes[f.node].children[1], o.right, std::move(fresh2)});
  }
  return res;
}

}  // namespace rctw
