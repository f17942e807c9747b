#include "rctw/width.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "rctw/errors.hpp"

namespace rctw {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.num_vertices(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

/// Vertices outside s + v reachable from v through s.
Mask eliminated_neighbors(const std::vector<Mask>& adj, Mask s, int v) {
  Mask reach = Mask{1} << v;
  Mask frontier = reach;
  Mask boundary = 0;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
    boundary |= next & ~s;
    next &= s & ~reach;
    reach |= next;
    frontier = next;
  }
  return boundary & ~(Mask{1} << v);
}

int degeneracy(const std::vector<Mask>& adj) {
  const int n = static_cast<int>(adj.size());
  Mask alive = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  int best = 0;
  while (alive != 0) {
    int pick = -1;
    int pick_deg = n + 1;
    for (Mask a = alive; a != 0; a &= a - 1) {
      const int v = std::countr_zero(a);
      const int d = std::popcount(adj[v] & alive);
      if (d < pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    best = std::max(best, pick_deg);
    alive &= ~(Mask{1} << pick);
  }
  return best;
}

/// Searches for a set s, reachable from the empty set by eliminations of
/// degree <= k, whose complement fits into one bag. Returns the elimination
/// order on success.
bool search_order(const std::vector<Mask>& adj, int k, std::vector<int>* order) {
  const int n = static_cast<int>(adj.size());
  if (n <= k + 1) {
    if (order) {
      order->clear();
      for (int v = 0; v < n; ++v) order->push_back(v);
    }
    return true;
  }
  const Mask full = (Mask{1} << n) - 1;
  std::vector<std::int8_t> via(std::size_t{1} << n, -1);  // vertex added last; -2 for the start
  std::vector<Mask> stack{0};
  via[0] = -2;
  while (!stack.empty()) {
    const Mask s = stack.back();
    stack.pop_back();
    if (n - std::popcount(s) <= k + 1) {
      if (order) {
        std::vector<int> rev;
        for (Mask cur = s; cur != 0;) {
          const int v = via[cur];
          rev.push_back(v);
          cur &= ~(Mask{1} << v);
        }
        order->assign(rev.rbegin(), rev.rend());
        for (Mask rest = full & ~s; rest != 0; rest &= rest - 1) order->push_back(std::countr_zero(rest));
      }
      return true;
    }
    for (Mask rest = full & ~s; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const Mask next = s | (Mask{1} << v);
      if (via[next] != -1) continue;
      if (std::popcount(eliminated_neighbors(adj, s, v)) > k) continue;
      via[next] = static_cast<std::int8_t>(v);
      stack.push_back(next);
    }
  }
  return false;
}

TreeDecomposition decomposition_from_order(const std::vector<Mask>& adj_in, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  std::vector<Mask> adj = adj_in;
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::vector<Vertex>> bag_of(n);
  std::vector<int> parent_of(n, -1);  // indexed by elimination position
  Mask remaining = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    remaining &= ~(Mask{1} << v);
    const Mask higher = adj[v] & remaining;
    std::vector<Vertex> bag{v};
    int earliest = n;
    for (Mask h = higher; h != 0; h &= h - 1) {
      const int w = std::countr_zero(h);
      bag.push_back(w);
      earliest = std::min(earliest, position[w]);
      adj[w] |= higher & ~(Mask{1} << w);
    }
    std::sort(bag.begin(), bag.end());
    bag_of[i] = std::move(bag);
    parent_of[i] = earliest == n ? -1 : earliest;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (parent_of[i] == -1) parent_of[i] = n - 1;

  std::vector<std::vector<int>> kids(n);
  for (int i = 0; i + 1 < n; ++i) kids[parent_of[i]].push_back(i);

  TreeDecomposition td;
  std::vector<int> queue{n - 1};
  std::vector<int> new_id(n, -1);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int i = queue[head];
    new_id[i] = td.add_node(bag_of[i]);
    for (int k : kids[i]) queue.push_back(k);
  }
  for (int i = 0; i < n; ++i)
    for (int k : kids[i]) td.children[new_id[i]].push_back(new_id[k]);
  return td;
}

void check_limit(const Graph& g, int limit, const char* what) {
  if (g.num_vertices() > limit)
    throw ResourceError(std::string(what) + ": " + std::to_string(g.num_vertices()) +
                            " vertices exceed the limit of " + std::to_string(limit),
                        limit);
  if (g.num_vertices() > 31)
    throw ResourceError(std::string(what) + ": more than 31 vertices are not supported", 31);
}

}  // namespace

bool treewidth_at_most(const Graph& g, int k, int limit) {
  check_limit(g, limit, "treewidth");
  if (k < 0) return false;
  return search_order(adjacency_masks(g), k, nullptr);
}

TreewidthResult exact_treewidth(const Graph& g, int limit) {
  check_limit(g, limit, "treewidth");
  TreewidthResult res;
  const int n = g.num_vertices();
  if (n == 0) {
    res.td.add_node({});
    return res;
  }
  const auto adj = adjacency_masks(g);
  std::vector<int> order;
  for (int k = degeneracy(adj); k < n; ++k) {
    if (search_order(adj, k, &order)) {
      res.width = k;
      break;
    }
  }
  res.td = decomposition_from_order(adj, order);
  if (res.td.width() != res.width) throw InternalError("treewidth witness has unexpected width");
  return res;
}

RankwidthResult exact_rankwidth(const Graph& g, int limit) {
  check_limit(g, limit, "rank-width");
  RankwidthResult res;
  const int n = g.num_vertices();
  if (n == 0) return res;
  if (n == 1) {
    res.rd.nodes.push_back({{}, 0});
    return res;
  }
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  const std::size_t count = std::size_t{1} << n;

  std::vector<std::uint8_t> cr(count, 0);
  for (Mask s = 1; s < full; ++s) {
    // Gaussian elimination on rows restricted to the complement.
    Mask basis[32] = {};
    int rank = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      Mask row = adj[std::countr_zero(rest)] & ~s & full;
      while (row != 0) {
        const int top = 31 - std::countl_zero(row);
        if (basis[top] == 0) {
          basis[top] = row;
          ++rank;
          break;
        }
        row ^= basis[top];
      }
    }
    cr[s] = static_cast<std::uint8_t>(rank);
  }

  std::vector<std::uint8_t> best(count, 0);
  std::vector<Mask> split(count, 0);
  for (Mask s = 1; s <= full; ++s) {
    if (std::has_single_bit(s)) {
      best[s] = cr[s];
      continue;
    }
    const Mask low = s & (~s + 1);
    const Mask rest = s & ~low;
    int best_value = 1 << 30;
    Mask best_a = 0;
    // Proper subsets a of s containing the lowest member.
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask a = low | sub;
      if (a != s) {
        const Mask b = s & ~a;
        const int value = std::max({cr[a], cr[b], best[a], best[b]});
        if (value < best_value) {
          best_value = value;
          best_a = a;
        }
      }
      if (sub == 0) break;
    }
    best[s] = static_cast<std::uint8_t>(best_value);
    split[s] = best_a;
  }

  auto& nodes = res.rd.nodes;
  std::vector<std::pair<Mask, int>> stack{{full, 0}};
  nodes.emplace_back();
  while (!stack.empty()) {
    auto [s, t] = stack.back();
    stack.pop_back();
    if (std::has_single_bit(s)) {
      nodes[t].vertex = std::countr_zero(s);
      continue;
    }
    for (Mask part : {split[s], s & ~split[s]}) {
      const int child = static_cast<int>(nodes.size());
      nodes.emplace_back();
      nodes[t].children.push_back(child);
      stack.emplace_back(part, child);
    }
  }
  res.width = best[full];
  res.rd.width = res.width;
  return res;
}

}  // namespace rctw
