#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "rctw/errors.hpp"
#include "rctw/modulator.hpp"
#include "rctw/twins.hpp"

namespace rctw {

namespace {

// Special path tuples: (i,0,x) starts at s_i, (0,i,x) starts at t_i, both
// ending in class x; (i,i) runs from s_i to t_i.
enum Kind : int { FromS = 0, FromT = 1, Closed = 2 };

// Normal paths are stored as a sorted multiset of endpoint pairs a*W+b with
// a <= b; special paths as (i << 6) | (kind << 4) | x. W is 8 for class
// slots and 16 for the side-tagged labels used while merging.
struct Key {
  std::vector<std::uint8_t> normal;
  std::vector<std::uint16_t> special;
  auto operator<=>(const Key&) const = default;
};

constexpr std::uint16_t special_code(int i, int kind, int x) {
  return static_cast<std::uint16_t>((i << 6) | (kind << 4) | x);
}
constexpr int special_pair(std::uint16_t code) { return code >> 6; }
constexpr int special_kind(std::uint16_t code) { return (code >> 4) & 3; }
constexpr int special_end(std::uint16_t code) { return code & 15; }

std::uint8_t pair_code(int a, int b, int width) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint8_t>(a * width + b);
}

void insert_sorted(std::vector<std::uint8_t>& v, std::uint8_t x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }
void insert_sorted(std::vector<std::uint16_t>& v, std::uint16_t x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }
template <class T>
void erase_one(std::vector<T>& v, T x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); }

enum class OpKind : std::uint8_t { NormalNormal, NormalSpecial, SpecialSpecial };

struct Op {
  OpKind kind{};
  int merge_a = 0, other_a = 0;  // first normal path, or unused
  int merge_b = 0, other_b = 0;  // second normal path
  std::uint16_t first = 0, second = 0;  // special codes
};

struct Step {
  int prev = -1;  // labelled state this one was derived from; -1 for starts
  int left = -1, right = -1;
  Op op;
};

struct Origin {
  int state = -1;   // labelled state at internal nodes
  int pair = -1;    // leaves: pair served by the leaf vertex, -1 if normal
  int kind = -1;
};

struct NodeTable {
  std::map<Key, int> index;
  std::vector<Key> keys;
  std::vector<Origin> origins;
  std::vector<Key> states;  // labelled states reached while merging
  std::vector<Step> steps;

  void add(Key key, Origin o) {
    auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(keys.size()));
    if (!fresh) return;
    keys.push_back(it->first);
    origins.push_back(o);
  }
};

struct Partial {
  std::vector<std::vector<Vertex>> normal;
  std::vector<std::pair<std::uint16_t, std::vector<Vertex>>> special;  // (pair, kind) code, terminal first
};

}  // namespace

PathCoverResult disjoint_paths_cover(const Graph& g, const VertexSet& x, const std::vector<Edge>& pairs,
                                     const RankDecomposition& rd, int c) {
  const int n = g.num_vertices();
  if (x.universe() != n) throw InputError("paths cover: modulator does not match the graph");
  const int m = static_cast<int>(pairs.size());
  if (m >= 1 << 10) throw InputError("paths cover: too many pairs");
  for (auto [s, t] : pairs) {
    if (!x.contains(s) || !x.contains(t)) throw InputError("paths cover: pair endpoints must lie in X");
    if (s == t) throw InputError("paths cover: pair with s_i = t_i at vertex " + std::to_string(s));
  }
  const TwinContext ctx = build_twin_context(g, x, rd, c);

  PathCoverResult res;
  if (ctx.num_nodes() == 0) {
    res.feasible = std::all_of(pairs.begin(), pairs.end(), [&](const Edge& p) { return g.has_edge(p.first, p.second); });
    if (res.feasible)
      for (auto [s, t] : pairs) res.paths.push_back({s, t});
    return res;
  }

  const int z = ctx.z;
  std::vector<int> direct;  // pairs joined by an edge
  for (int i = 0; i < m; ++i)
    if (g.has_edge(pairs[i].first, pairs[i].second)) direct.push_back(i);

  std::vector<NodeTable> table(ctx.num_nodes());
  for (int t : rd.postorder()) {
    auto& here = table[t];
    if (rd.is_leaf(t)) {
      const Vertex v = ctx.rest[rd.nodes[t].vertex];
      for (std::uint32_t subset = 0; subset < (1u << direct.size()); ++subset) {
        std::vector<std::uint16_t> base;
        for (std::size_t j = 0; j < direct.size(); ++j)
          if (subset >> j & 1) base.push_back(special_code(direct[j], Closed, 0));
        std::sort(base.begin(), base.end());
        here.add({{0}, base}, {-1, -1, -1});
        for (int i = 0; i < m; ++i) {
          if (std::binary_search(base.begin(), base.end(), special_code(i, Closed, 0))) continue;
          const bool near_s = g.has_edge(v, pairs[i].first);
          const bool near_t = g.has_edge(v, pairs[i].second);
          for (int kind : {FromS, FromT, Closed}) {
            if ((kind == FromS && !near_s) || (kind == FromT && !near_t) || (kind == Closed && !(near_s && near_t)))
              continue;
            auto sp = base;
            insert_sorted(sp, special_code(i, kind, 0));
            here.add({{}, sp}, {-1, i, kind});
          }
        }
      }
      continue;
    }

    const int t1 = rd.nodes[t].children[0];
    const int t2 = rd.nodes[t].children[1];
    const auto link = link_matrix(ctx, t1, t2);
    const auto up1 = lift_map(ctx, t1, t);
    const auto up2 = lift_map(ctx, t2, t);
    // Labels: class slot on the first side, z + slot on the second.
    auto linked = [&](int a, int b) {
      if ((a < z) == (b < z)) return false;
      if (a >= z) std::swap(a, b);
      return link[a * z + (b - z)] != 0;
    };
    auto relabel = [&](int label) { return label < z ? up1[label] : up2[label - z]; };

    std::map<Key, int> seen;
    auto visit = [&](Key state, Step step) {
      auto [it, fresh] = seen.try_emplace(std::move(state), static_cast<int>(here.states.size()));
      if (!fresh) return;
      here.states.push_back(it->first);
      here.steps.push_back(step);
    };

    const auto& left = table[t1];
    const auto& right = table[t2];
    for (int a = 0; a < static_cast<int>(left.keys.size()); ++a) {
      for (int b = 0; b < static_cast<int>(right.keys.size()); ++b) {
        const Key& k1 = left.keys[a];
        const Key& k2 = right.keys[b];
        std::vector<int> starts(m, 0), ends(m, 0);
        bool ok = true;
        for (const Key* k : {&k1, &k2}) {
          for (auto code : k->special) {
            const int i = special_pair(code);
            const int kind = special_kind(code);
            if (kind != FromT) ok = ok && ++starts[i] <= 1;
            if (kind != FromS) ok = ok && ++ends[i] <= 1;
          }
        }
        if (!ok) continue;
        Key state;
        for (auto code : k1.normal) state.normal.push_back(pair_code(code / 8, code % 8, 16));
        for (auto code : k2.normal) state.normal.push_back(pair_code(z + code / 8, z + code % 8, 16));
        for (auto code : k1.special) state.special.push_back(code);
        for (auto code : k2.special)
          state.special.push_back(special_kind(code) == Closed ? code
                                                               : static_cast<std::uint16_t>(code + z));
        std::sort(state.normal.begin(), state.normal.end());
        std::sort(state.special.begin(), state.special.end());
        visit(std::move(state), {-1, a, b, {}});
      }
    }

    // Merge paths along edges between the two sides until nothing new appears.
    for (std::size_t cur = 0; cur < here.states.size(); ++cur) {
      const Key state = here.states[cur];
      const int from = static_cast<int>(cur);
      std::vector<std::uint8_t> kinds = state.normal;
      kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
      auto ends_of = [](std::uint8_t code) {
        std::vector<std::pair<int, int>> out{{code / 16, code % 16}};
        if (code / 16 != code % 16) out.emplace_back(code % 16, code / 16);
        return out;
      };
      for (std::size_t u = 0; u < kinds.size(); ++u) {
        for (std::size_t w = u; w < kinds.size(); ++w) {
          if (u == w && std::count(state.normal.begin(), state.normal.end(), kinds[u]) < 2) continue;
          for (auto [pm, po] : ends_of(kinds[u])) {
            for (auto [qm, qo] : ends_of(kinds[w])) {
              if (!linked(pm, qm)) continue;
              Key next = state;
              erase_one(next.normal, kinds[u]);
              erase_one(next.normal, kinds[w]);
              insert_sorted(next.normal, pair_code(po, qo, 16));
              visit(std::move(next), {from, -1, -1, {OpKind::NormalNormal, pm, po, qm, qo, 0, 0}});
            }
          }
        }
      }
      for (auto code : state.special) {
        if (special_kind(code) == Closed) continue;
        const int end = special_end(code);
        for (auto kind : kinds) {
          for (auto [qm, qo] : ends_of(kind)) {
            if (!linked(end, qm)) continue;
            Key next = state;
            erase_one(next.normal, kind);
            erase_one(next.special, code);
            insert_sorted(next.special, special_code(special_pair(code), special_kind(code), qo));
            visit(std::move(next), {from, -1, -1, {OpKind::NormalSpecial, 0, 0, qm, qo, code, 0}});
          }
        }
      }
      for (auto s_code : state.special) {
        if (special_kind(s_code) != FromS) continue;
        for (auto t_code : state.special) {
          if (special_kind(t_code) != FromT || special_pair(t_code) != special_pair(s_code)) continue;
          if (!linked(special_end(s_code), special_end(t_code))) continue;
          Key next = state;
          erase_one(next.special, s_code);
          erase_one(next.special, t_code);
          insert_sorted(next.special, special_code(special_pair(s_code), Closed, 0));
          visit(std::move(next), {from, -1, -1, {OpKind::SpecialSpecial, 0, 0, 0, 0, s_code, t_code}});
        }
      }
    }

    for (int s = 0; s < static_cast<int>(here.states.size()); ++s) {
      const Key& state = here.states[s];
      Key key;
      for (auto code : state.normal) key.normal.push_back(pair_code(relabel(code / 16), relabel(code % 16), 8));
      for (auto code : state.special)
        key.special.push_back(special_kind(code) == Closed
                                  ? code
                                  : special_code(special_pair(code), special_kind(code), relabel(special_end(code))));
      std::sort(key.normal.begin(), key.normal.end());
      std::sort(key.special.begin(), key.special.end());
      here.add(std::move(key), {s, -1, -1});
    }
  }

  std::vector<std::uint16_t> goal;
  for (int i = 0; i < m; ++i) goal.push_back(special_code(i, Closed, 0));
  const auto& root = table[0];
  int accepted = -1;
  for (int i = 0; i < static_cast<int>(root.keys.size()) && accepted == -1; ++i)
    if (root.keys[i].normal.empty() && root.keys[i].special == goal) accepted = i;
  if (accepted == -1) return res;
  res.feasible = true;

  std::function<Partial(int, int)> realize = [&](int t, int key_index) -> Partial {
    const auto& here = table[t];
    const Key& key = here.keys[key_index];
    const Origin& o = here.origins[key_index];
    Partial out;
    if (rd.is_leaf(t)) {
      const Vertex v = ctx.rest[rd.nodes[t].vertex];
      if (o.pair == -1) out.normal.push_back({v});
      for (auto code : key.special) {
        const int i = special_pair(code);
        const auto [s, tt] = pairs[i];
        const auto tag = special_code(i, special_kind(code), 0);
        if (i != o.pair) {
          out.special.push_back({tag, {s, tt}});
        } else if (o.kind == FromS) {
          out.special.push_back({tag, {s, v}});
        } else if (o.kind == FromT) {
          out.special.push_back({tag, {tt, v}});
        } else {
          out.special.push_back({tag, {s, v, tt}});
        }
      }
      return out;
    }
    const int t1 = rd.nodes[t].children[0];
    const int t2 = rd.nodes[t].children[1];
    std::vector<Op> ops;
    int s = o.state;
    while (here.steps[s].prev != -1) {
      ops.push_back(here.steps[s].op);
      s = here.steps[s].prev;
    }
    std::reverse(ops.begin(), ops.end());
    Partial a = realize(t1, here.steps[s].left);
    Partial b = realize(t2, here.steps[s].right);
    out.normal = std::move(a.normal);
    out.normal.insert(out.normal.end(), b.normal.begin(), b.normal.end());
    out.special = std::move(a.special);
    out.special.insert(out.special.end(), b.special.begin(), b.special.end());

    auto label = [&](Vertex v) {
      return ctx.below[t1].contains(v) ? ctx.class_of[t1][v] : z + ctx.class_of[t2][v];
    };
    // Index of a normal path with the given end labels, oriented so that
    // `tail` labels its last vertex.
    auto take_normal = [&](int tail, int head, int skip) {
      for (int i = 0; i < static_cast<int>(out.normal.size()); ++i) {
        if (i == skip) continue;
        auto& p = out.normal[i];
        if (label(p.back()) == tail && label(p.front()) == head) return i;
        if (label(p.front()) == tail && label(p.back()) == head) {
          std::reverse(p.begin(), p.end());
          return i;
        }
      }
      throw InternalError("paths cover: witness replay lost a normal path");
    };
    auto take_special = [&](std::uint16_t code) {
      for (int i = 0; i < static_cast<int>(out.special.size()); ++i) {
        const auto& [tag, p] = out.special[i];
        if (special_pair(tag) == special_pair(code) && special_kind(tag) == special_kind(code) &&
            label(p.back()) == special_end(code))
          return i;
      }
      throw InternalError("paths cover: witness replay lost a special path");
    };
    for (const Op& op : ops) {
      if (op.kind == OpKind::NormalNormal) {
        const int i = take_normal(op.merge_a, op.other_a, -1);
        const int j = take_normal(op.other_b, op.merge_b, i);
        auto joined = out.normal[i];
        joined.insert(joined.end(), out.normal[j].begin(), out.normal[j].end());
        out.normal.erase(out.normal.begin() + std::max(i, j));
        out.normal.erase(out.normal.begin() + std::min(i, j));
        out.normal.push_back(std::move(joined));
      } else if (op.kind == OpKind::NormalSpecial) {
        const int sp = take_special(op.first);
        const int j = take_normal(op.other_b, op.merge_b, -1);
        auto& path = out.special[sp].second;
        path.insert(path.end(), out.normal[j].begin(), out.normal[j].end());
        out.normal.erase(out.normal.begin() + j);
      } else {
        const int i = take_special(op.first);
        const int j = take_special(op.second);
        auto joined = out.special[i].second;
        joined.insert(joined.end(), out.special[j].second.rbegin(), out.special[j].second.rend());
        const auto tag = special_code(special_pair(op.first), Closed, 0);
        out.special.erase(out.special.begin() + std::max(i, j));
        out.special.erase(out.special.begin() + std::min(i, j));
        out.special.push_back({tag, std::move(joined)});
      }
    }
    return out;
  };

  Partial whole = realize(0, accepted);
  res.paths.assign(m, {});
  for (auto& [tag, path] : whole.special) res.paths[special_pair(tag)] = std::move(path);
  return res;
}

}  // namespace rctw
