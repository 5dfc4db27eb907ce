#ifndef IPG_ORACLE_HPP
#define IPG_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/types.hpp"

// Unrestricted-memory reference implementations. Tests compare the
// restricted algorithms against these.

namespace ipg {

using LevelMap = std::vector<std::optional<std::size_t>>;

namespace detail {

inline void oracle_check(const GraphData& gd, Vertex s, Mode mode) {
  if (s < 1 || s > gd.n) throw GraphError("source out of range");
  if (gd.directed != (mode == Mode::directed)) throw GraphError("mode does not match the graph");
}

}  // namespace detail

inline std::vector<Vertex> oracle_lex_dfs(const GraphData& gd, Vertex s, Mode mode) {
  detail::oracle_check(gd, s, mode);
  std::vector<bool> seen(gd.n + 1, false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
  std::vector<Vertex> order{s};
  seen[s] = true;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    const auto& adj = gd.out[v];
    while (i < adj.size() && seen[adj[i].v]) ++i;
    if (i == adj.size()) {
      stack.pop_back();
      continue;
    }
    const Vertex u = adj[i].v;
    seen[u] = true;
    order.push_back(u);
    stack.emplace_back(u, 0);
  }
  return order;
}

inline std::vector<bool> oracle_reachable(const GraphData& gd, Vertex s) {
  std::vector<bool> seen(gd.n + 1, false);
  std::vector<Vertex> todo{s};
  seen[s] = true;
  while (!todo.empty()) {
    const Vertex v = todo.back();
    todo.pop_back();
    for (const auto& e : gd.out[v]) {
      if (!seen[e.v]) {
        seen[e.v] = true;
        todo.push_back(e.v);
      }
    }
  }
  return seen;
}

/// Replays `order` against a stack of gray vertices. Before each vertex is
/// accepted, tops without unvisited neighbours are popped; the vertex must
/// then be an unvisited neighbour of the top. The order must cover exactly
/// the set reachable from s.
inline bool check_general_dfs(const GraphData& gd, Vertex s, std::span<const Vertex> order,
                              Mode mode) {
  detail::oracle_check(gd, s, mode);
  if (order.empty() || order.front() != s) return false;
  std::vector<bool> seen(gd.n + 1, false);
  auto has_unvisited = [&](Vertex v) {
    return std::any_of(gd.out[v].begin(), gd.out[v].end(), [&](const AdjEntry& e) { return !seen[e.v]; });
  };
  std::vector<Vertex> stack{s};
  seen[s] = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex v = order[i];
    if (v < 1 || v > gd.n || seen[v]) return false;
    while (!stack.empty() && !has_unvisited(stack.back())) stack.pop_back();
    if (stack.empty()) return false;
    const auto& adj = gd.out[stack.back()];
    if (std::none_of(adj.begin(), adj.end(), [&](const AdjEntry& e) { return e.v == v; })) return false;
    seen[v] = true;
    stack.push_back(v);
  }
  return seen == oracle_reachable(gd, s);
}

inline LevelMap oracle_bfs_levels(const GraphData& gd, Vertex s, Mode mode) {
  detail::oracle_check(gd, s, mode);
  LevelMap lv(gd.n + 1);
  std::queue<Vertex> q;
  lv[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    for (const auto& e : gd.out[v]) {
      if (!lv[e.v]) {
        lv[e.v] = *lv[v] + 1;
        q.push(e.v);
      }
    }
  }
  return lv;
}

/// True iff `order` lists exactly the reachable set, without repeats, in
/// non-decreasing BFS level.
inline bool check_bfs_order(const GraphData& gd, Vertex s, std::span<const Vertex> order) {
  const auto lv = oracle_bfs_levels(gd, s, gd.mode());
  if (order.empty() || order.front() != s) return false;
  std::vector<bool> seen(gd.n + 1, false);
  std::size_t last = 0;
  for (const Vertex v : order) {
    if (v < 1 || v > gd.n || seen[v] || !lv[v] || *lv[v] < last) return false;
    seen[v] = true;
    last = *lv[v];
  }
  return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true)) ==
         static_cast<std::size_t>(std::count_if(lv.begin(), lv.end(), [](const auto& x) { return x.has_value(); }));
}

namespace detail {

class DisjointSets {
public:
  explicit DisjointSets(std::size_t n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Kruskal minimum spanning forest; ties by (weight, min endpoint, max endpoint).
inline std::vector<Edge> oracle_mst_edges(const GraphData& gd) {
  if (gd.directed) throw GraphError("spanning trees need an undirected graph");
  auto edges = gd.edges;
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
  });
  detail::DisjointSets ds(gd.n);
  std::vector<Edge> tree;
  for (const auto& e : edges) {
    if (ds.unite(e.u, e.v)) tree.push_back(e);
  }
  return tree;
}

inline Weight oracle_mst_weight(const GraphData& gd) {
  Weight total = 0;
  for (const auto& e : oracle_mst_edges(gd)) total += e.w;
  return total;
}

namespace detail {

inline constexpr std::size_t kMaxBitmaskN = 24;

inline std::vector<std::uint32_t> neighbour_masks(const GraphData& gd) {
  if (gd.n > kMaxBitmaskN) throw GraphError("exhaustive oracle limited to n <= 24");
  std::vector<std::uint32_t> mask(gd.n + 1, 0);
  for (Vertex v = 1; v <= gd.n; ++v) {
    for (const auto& e : gd.out[v]) mask[v] |= std::uint32_t{1} << (e.v - 1);
  }
  return mask;
}

template <typename Pred>
std::size_t min_subset(std::size_t n, Pred ok) {
  std::size_t best = n;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < best && ok(s)) best = size;
  }
  return best;
}

}  // namespace detail

inline std::size_t oracle_min_vertex_cover(const GraphData& gd) {
  if (gd.n > detail::kMaxBitmaskN) throw GraphError("exhaustive oracle limited to n <= 24");
  return detail::min_subset(gd.n, [&](std::uint32_t s) {
    for (const auto& e : gd.edges) {
      if ((s >> (e.u - 1) & 1U) == 0 && (s >> (e.v - 1) & 1U) == 0) return false;
    }
    return true;
  });
}

inline std::size_t oracle_min_dominating_set(const GraphData& gd) {
  const auto nb = detail::neighbour_masks(gd);
  return detail::min_subset(gd.n, [&](std::uint32_t s) {
    for (Vertex v = 1; v <= gd.n; ++v) {
      if ((s >> (v - 1) & 1U) == 0 && (s & nb[v]) == 0) return false;
    }
    return true;
  });
}

/// Copy with every adjacency sequence sorted by label. Lex-DFS on an ARRAY
/// graph is defined over this order, since the search sorts first.
inline GraphData sorted_adjacency(const GraphData& gd) {
  GraphData h = gd;
  auto by_label = [](const AdjEntry& a, const AdjEntry& b) { return a.v < b.v; };
  for (Vertex v = 1; v <= h.n; ++v) {
    std::sort(h.out[v].begin(), h.out[v].end(), by_label);
    if (h.directed) std::sort(h.in[v].begin(), h.in[v].end(), by_label);
  }
  return h;
}

}  // namespace ipg

#endif  // IPG_ORACLE_HPP
