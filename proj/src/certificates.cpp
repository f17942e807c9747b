#include "rctw/certificates.hpp"

#include <set>

namespace rctw {

std::optional<int> check_coloring(const Graph& g, const std::vector<int>& coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices()) return std::nullopt;
  for (int col : coloring)
    if (col < 0) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (coloring[u] == coloring[v]) return std::nullopt;
  return static_cast<int>(std::set<int>(coloring.begin(), coloring.end()).size());
}

bool check_path_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                      const std::vector<std::vector<Vertex>>& paths) {
  const int n = g.num_vertices();
  if (paths.size() != pairs.size()) return false;
  std::vector<int> seen(n, 0);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = paths[i];
    if (p.size() < 2 || p.front() != pairs[i].first || p.back() != pairs[i].second) return false;
    for (std::size_t j = 0; j + 1 < p.size(); ++j)
      if (p[j] < 0 || p[j] >= n || p[j + 1] < 0 || p[j + 1] >= n || !g.has_edge(p[j], p[j + 1])) return false;
    for (std::size_t j = 1; j + 1 < p.size(); ++j) {
      if (x.contains(p[j])) return false;
      ++seen[p[j]];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!x.contains(v) && seen[v] != 1) return false;
  return true;
}

bool check_hamiltonian_cycle(const Graph& g, const std::vector<Vertex>& order) {
  const int n = g.num_vertices();
  if (n < 3 || static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (Vertex v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n])) return false;
  return true;
}

int cut_size(const Graph& g, const VertexSet& side) {
  int cut = 0;
  for (auto [u, v] : g.edges())
    if (side.contains(u) != side.contains(v)) ++cut;
  return cut;
}

}  // namespace rctw
