#include "rctw/twins.hpp"

#include <string>

#include "rctw/errors.hpp"
#include "rctw/validate.hpp"

namespace rctw {

TwinContext build_twin_context(const Graph& g, const VertexSet& x, const RankDecomposition& rd, int c) {
  const int n = g.num_vertices();
  if (x.universe() != n) throw InputError("twin context: modulator does not match the graph");
  if (c < 0 || c > 3) throw InputError("twin context: c must lie in 0..3");
  TwinContext ctx;
  ctx.graph = g;
  ctx.modulator = x;
  ctx.rd = rd;
  ctx.c = c;
  ctx.z = 1 << c;
  const VertexSet rest_set = g.vertex_set() - x;
  ctx.rest = rest_set.to_vector();

  const auto sub = induced_subgraph(g, rest_set);
  const auto check = validate_rank_decomposition(sub.graph, rd);
  if (!check.violations.empty())
    throw InputError("twin context: invalid rank decomposition of G - X\n" + describe(check.violations));
  if (check.width > c)
    throw InputError("twin context: rank decomposition width " + std::to_string(check.width) + " exceeds c = " +
                     std::to_string(c));

  const int nodes = rd.num_nodes();
  ctx.parent = rd.parents();
  ctx.below.assign(nodes, VertexSet(n));
  for (int t : rd.postorder()) {
    if (rd.is_leaf(t)) {
      ctx.below[t].insert(ctx.rest[rd.nodes[t].vertex]);
    } else {
      for (int ch : rd.nodes[t].children) ctx.below[t] |= ctx.below[ch];
    }
  }
  ctx.classes.assign(nodes, {});
  ctx.class_of.assign(nodes, std::vector<int>(n, -1));
  for (int t = 0; t < nodes; ++t) {
    const VertexSet outside = rest_set - ctx.below[t];
    std::vector<VertexSet> signatures;
    auto& classes = ctx.classes[t];
    ctx.below[t].for_each([&](Vertex v) {
      const VertexSet sig = g.neighbors(v) & outside;
      std::size_t j = 0;
      while (j < signatures.size() && !(signatures[j] == sig)) ++j;
      if (j == signatures.size()) {
        if (static_cast<int>(j) == ctx.z) throw InternalError("twin context: more than 2^c twin classes");
        signatures.push_back(sig);
        classes.emplace_back(n);
      }
      classes[j].insert(v);
      ctx.class_of[t][v] = static_cast<int>(j);
    });
    while (static_cast<int>(classes.size()) < ctx.z) classes.emplace_back(n);
  }
  return ctx;
}

std::vector<char> link_matrix(const TwinContext& ctx, int t1, int t2) {
  if (t1 == t2 || t1 < 0 || t2 < 0 || t1 >= ctx.num_nodes() || t2 >= ctx.num_nodes() || ctx.parent[t1] == -1 ||
      ctx.parent[t1] != ctx.parent[t2])
    throw InputError("link matrix: nodes " + std::to_string(t1) + " and " + std::to_string(t2) +
                     " are not siblings");
  const int z = ctx.z;
  std::vector<char> link(z * z, 0);
  for (int j1 = 0; j1 < z; ++j1) {
    const auto& a = ctx.classes[t1][j1];
    if (a.empty()) continue;
    for (int j2 = 0; j2 < z; ++j2) {
      const auto& b = ctx.classes[t2][j2];
      if (!b.empty() && is_complete_between(ctx.graph, a, b)) link[j1 * z + j2] = 1;
    }
  }
  return link;
}

std::vector<int> lift_map(const TwinContext& ctx, int child, int parent) {
  if (child < 0 || child >= ctx.num_nodes() || parent < 0 || ctx.parent[child] != parent)
    throw InputError("lift map: node " + std::to_string(child) + " is not a child of " + std::to_string(parent));
  std::vector<int> lift(ctx.z, -1);
  for (int j = 0; j < ctx.z; ++j) {
    const auto& cls = ctx.classes[child][j];
    if (cls.empty()) continue;
    const int p = ctx.class_of[parent][cls.first()];
    if (p < 0 || !cls.is_subset_of(ctx.classes[parent][p]))
      throw InternalError("lift map: child class not contained in a parent class");
    lift[j] = p;
  }
  return lift;
}

}  // namespace rctw
