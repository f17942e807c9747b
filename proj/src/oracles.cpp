#include "rctw/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rctw/errors.hpp"

namespace rctw::oracle {

namespace {

using Row = std::uint32_t;

void require(int n, int limit, const char* what) {
  if (n > limit)
    throw ResourceError(std::string(what) + " oracle: " + std::to_string(n) + " vertices exceed the limit of " +
                            std::to_string(limit),
                        limit);
  if (n > 31) throw ResourceError(std::string(what) + " oracle: more than 31 vertices", 31);
}

std::vector<Row> rows_of(const Graph& g) {
  std::vector<Row> rows(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    rows[u] |= Row{1} << v;
    rows[v] |= Row{1} << u;
  }
  return rows;
}

bool colorable(const std::vector<Row>& rows, const std::vector<int>& order, std::vector<int>& color, int pos,
               int used, int k) {
  if (pos == static_cast<int>(order.size())) return true;
  const int v = order[pos];
  for (int col = 0; col < std::min(used + 1, k); ++col) {
    bool ok = true;
    for (Row r = rows[v]; r != 0 && ok; r &= r - 1) ok = color[std::countr_zero(r)] != col;
    if (!ok) continue;
    color[v] = col;
    if (colorable(rows, order, color, pos + 1, std::max(used, col + 1), k)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g, int limit) {
  const int n = g.num_vertices();
  require(n, limit, "chromatic");
  if (n == 0) return 0;
  const auto rows = rows_of(g);
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(rows[a]) > std::popcount(rows[b]); });
  for (int k = 1;; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(rows, order, color, 0, 0, k)) return k;
  }
}

int chromatic_number_by_independent_sets(const Graph& g, int limit) {
  const int n = g.num_vertices();
  require(n, limit, "chromatic");
  const auto rows = rows_of(g);
  const Row full = (Row{1} << n) - 1;
  std::vector<char> independent(std::size_t{1} << n, 0);
  for (Row s = 0; s <= full; ++s) {
    bool ok = true;
    for (Row r = s; r != 0 && ok; r &= r - 1) ok = (rows[std::countr_zero(r)] & s) == 0;
    independent[s] = ok;
  }
  std::vector<int> best(std::size_t{1} << n, 0);
  for (Row s = 1; s <= full; ++s) {
    const Row low = s & (~s + 1);
    const Row rest = s & ~low;
    int value = n + 1;
    for (Row sub = rest;; sub = (sub - 1) & rest) {
      const Row part = sub | low;
      if (independent[part]) value = std::min(value, 1 + best[s & ~part]);
      if (sub == 0) break;
    }
    best[s] = value;
  }
  return best[full];
}

bool hamiltonian_cycle(const Graph& g, int limit) {
  const int n = g.num_vertices();
  require(n, limit, "hamiltonian");
  if (n < 3) return false;
  const auto rows = rows_of(g);
  const Row full = (Row{1} << n) - 1;
  // reach[s] bit v: a path from vertex 0 through exactly s ends at v.
  std::vector<Row> reach(std::size_t{1} << n, 0);
  reach[1] = 1;
  for (Row s = 1; s <= full; s += 2) {
    for (Row ends = reach[s]; ends != 0; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      for (Row next = rows[v] & ~s; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        reach[s | (Row{1} << w)] |= Row{1} << w;
      }
    }
  }
  return (reach[full] & rows[0]) != 0;
}

int max_cut(const Graph& g, int limit) {
  const int n = g.num_vertices();
  require(n, limit, "max-cut");
  if (n == 0) return 0;
  const auto rows = rows_of(g);
  int best = 0;
  // Vertex n-1 stays on the zero side.
  for (Row side = 0; side < (Row{1} << (n - 1)); ++side) {
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (side >> v & 1) cut += std::popcount(rows[v] & ~side);
    best = std::max(best, cut);
  }
  return best;
}

namespace {

void require_modulator(const Graph& g, const VertexSet& x, const ModulatorLimits& limits) {
  if (x.universe() != g.num_vertices()) throw InputError("oracle: modulator does not match the graph");
  require(g.num_vertices() - x.size(), limits.max_rest, "modulator (|V \\ X|)");
  require(x.size(), limits.max_modulator, "modulator (|X|)");
}

}  // namespace

int precoloring_extension(const Graph& g, const VertexSet& x, const std::vector<int>& precolor,
                          const ModulatorLimits& limits) {
  require_modulator(g, x, limits);
  const int n = g.num_vertices();
  const auto rows = rows_of(g);
  std::vector<int> fixed_colors;
  for (int v = 0; v < n; ++v)
    if (x.contains(v)) fixed_colors.push_back(precolor[v]);
  std::sort(fixed_colors.begin(), fixed_colors.end());
  fixed_colors.erase(std::unique(fixed_colors.begin(), fixed_colors.end()), fixed_colors.end());
  const int p = static_cast<int>(fixed_colors.size());

  std::vector<int> free_vertices;
  for (int v = 0; v < n; ++v)
    if (!x.contains(v)) free_vertices.push_back(v);
  // Colors 0..p-1 are the precolor palette, p.. are new; X gets palette ids.
  std::vector<int> color(n, -1);
  for (int v = 0; v < n; ++v)
    if (x.contains(v))
      color[v] = static_cast<int>(std::lower_bound(fixed_colors.begin(), fixed_colors.end(), precolor[v]) -
                                  fixed_colors.begin());

  auto search = [&](auto&& self, std::size_t pos, int fresh_used, int budget) -> bool {
    if (pos == free_vertices.size()) return true;
    const int v = free_vertices[pos];
    for (int col = 0; col < p + std::min(fresh_used + 1, budget); ++col) {
      bool ok = true;
      for (Row r = rows[v]; r != 0 && ok; r &= r - 1) ok = color[std::countr_zero(r)] != col;
      if (!ok) continue;
      color[v] = col;
      if (self(self, pos + 1, std::max(fresh_used, col - p + 1), budget)) return true;
      color[v] = -1;
    }
    return false;
  };
  for (int budget = 0;; ++budget)
    if (search(search, 0, 0, budget)) return p + budget;
}

bool disjoint_paths_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                          const ModulatorLimits& limits) {
  require_modulator(g, x, limits);
  const int n = g.num_vertices();
  const auto rows = rows_of(g);
  Row inside = 0;  // V \ X
  for (int v = 0; v < n; ++v)
    if (!x.contains(v)) inside |= Row{1} << v;

  // Grows path i from `at`; `used` holds covered vertices of V \ X.
  auto grow = [&](auto&& self, std::size_t i, int at, Row used) -> bool {
    if (i == pairs.size()) return used == inside;
    const int t = pairs[i].second;
    if (rows[at] >> t & 1) {
      if (i + 1 == pairs.size() ? used == inside : self(self, i + 1, pairs[i + 1].first, used)) return true;
    }
    for (Row next = rows[at] & inside & ~used; next != 0; next &= next - 1) {
      const int w = std::countr_zero(next);
      if (self(self, i, w, used | (Row{1} << w))) return true;
    }
    return false;
  };
  if (pairs.empty()) return inside == 0;
  return grow(grow, 0, pairs[0].first, 0);
}

int maxcut_extension(const Graph& g, const VertexSet& x, const VertexSet& s, const ModulatorLimits& limits) {
  require_modulator(g, x, limits);
  const int n = g.num_vertices();
  const auto rows = rows_of(g);
  std::vector<int> free_vertices;
  Row base = 0;
  for (int v = 0; v < n; ++v) {
    if (!x.contains(v)) free_vertices.push_back(v);
    if (s.contains(v)) base |= Row{1} << v;
  }
  int best = 0;
  const int f = static_cast<int>(free_vertices.size());
  for (Row pick = 0; pick < (Row{1} << f); ++pick) {
    Row side = base;
    for (int i = 0; i < f; ++i)
      if (pick >> i & 1) side |= Row{1} << free_vertices[i];
    int cut = 0;
    for (int v = 0; v < n; ++v)
      if (side >> v & 1) cut += std::popcount(rows[v] & ~side);
    best = std::max(best, cut);
  }
  return best;
}

}  // namespace rctw::oracle
