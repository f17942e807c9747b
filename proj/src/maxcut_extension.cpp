#include <algorithm>
#include <cstdint>
#include <map>

#include "rctw/errors.hpp"
#include "rctw/modulator.hpp"
#include "rctw/twins.hpp"

namespace rctw {

namespace {

using Counts = std::vector<std::uint8_t>;

struct Entry {
  int value = 0;
  Counts left;  // child keys; empty at leaves
  Counts right;
};

}  // namespace

CutResult maxcut_extension(const Graph& g, const VertexSet& x, const VertexSet& s, const RankDecomposition& rd,
                           int c) {
  const int n = g.num_vertices();
  if (s.universe() != n || x.universe() != n) throw InputError("max-cut extension: sets do not match the graph");
  if (!s.is_subset_of(x)) throw InputError("max-cut extension: s is not a subset of X");
  const TwinContext ctx = build_twin_context(g, x, rd, c);
  const VertexSet other = x - s;

  int fixed = 0;
  s.for_each([&](Vertex v) { fixed += (g.neighbors(v) & other).size(); });

  CutResult res;
  res.side = s;
  if (ctx.num_nodes() == 0) {
    res.value = fixed;
    return res;
  }

  const int z = ctx.z;
  std::vector<std::map<Counts, Entry>> table(ctx.num_nodes());
  for (int t : rd.postorder()) {
    auto& here = table[t];
    if (rd.is_leaf(t)) {
      const Vertex v = ctx.rest[rd.nodes[t].vertex];
      Counts on(z, 0);
      on[0] = 1;
      here[on] = {(g.neighbors(v) & other).size(), {}, {}};
      here[Counts(z, 0)] = {(g.neighbors(v) & s).size(), {}, {}};
      continue;
    }
    const int t1 = rd.nodes[t].children[0];
    const int t2 = rd.nodes[t].children[1];
    const auto link = link_matrix(ctx, t1, t2);
    const auto up1 = lift_map(ctx, t1, t);
    const auto up2 = lift_map(ctx, t2, t);
    std::vector<int> size1(z), size2(z);
    for (int j = 0; j < z; ++j) {
      size1[j] = ctx.classes[t1][j].size();
      size2[j] = ctx.classes[t2][j].size();
    }
    for (const auto& [k1, e1] : table[t1]) {
      for (const auto& [k2, e2] : table[t2]) {
        int cross = 0;
        for (int j1 = 0; j1 < z; ++j1)
          for (int j2 = 0; j2 < z; ++j2)
            if (link[j1 * z + j2])
              cross += k1[j1] * (size2[j2] - k2[j2]) + (size1[j1] - k1[j1]) * k2[j2];
        Counts key(z, 0);
        for (int j = 0; j < z; ++j) {
          if (up1[j] >= 0) key[up1[j]] += k1[j];
          if (up2[j] >= 0) key[up2[j]] += k2[j];
        }
        const int value = e1.value + e2.value + cross;
        auto [it, fresh] = here.try_emplace(key, Entry{value, k1, k2});
        if (!fresh && value > it->second.value) it->second = {value, k1, k2};
      }
    }
  }

  const auto& root = table[0];
  auto best = std::max_element(root.begin(), root.end(),
                               [](const auto& a, const auto& b) { return a.second.value < b.second.value; });
  res.value = best->second.value + fixed;

  std::vector<std::pair<int, Counts>> stack{{0, best->first}};
  while (!stack.empty()) {
    auto [t, key] = stack.back();
    stack.pop_back();
    const Entry& e = table[t].at(key);
    if (rd.is_leaf(t)) {
      if (key[0] == 1) res.side.insert(ctx.rest[rd.nodes[t].vertex]);
      continue;
    }
    stack.emplace_back(rd.nodes[t].children[0], e.left);
    stack.emplace_back(rd.nodes[t].children[1], e.right);
  }
  return res;
}

}  // namespace rctw
