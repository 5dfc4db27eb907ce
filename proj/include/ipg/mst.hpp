#ifndef IPG_MST_HPP
#define IPG_MST_HPP

#include <cstddef>
#include <tuple>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/implicit_graph.hpp"
#include "ipg/rotate_adapter.hpp"
#include "ipg/traversal.hpp"
#include "ipg/types.hpp"

// Prim's algorithm without d[] or pi[]: a vertex of degree >= 2 is marked
// (in the tree) exactly when its list front is not its minimum element.

namespace ipg {

struct MstResult {
  std::vector<Edge> edges;  // endpoints normalised to u < v
  Weight total = 0;
};

namespace detail {

inline bool entry_less(const AdjEntry& a, const AdjEntry& b) { return std::tie(a.w, a.v) < std::tie(b.w, b.v); }

template <RotateSurface G>
AdjEntry min_entry(G& g, Vertex v) {
  auto cur = g.scan(v, Dir::out);
  auto best = *cur.next();
  while (auto e = cur.next()) {
    ++g.counter().comparisons;
    if (entry_less(*e, best)) best = *e;
  }
  return best;
}

inline Edge normalised(Vertex a, Vertex b, Weight w) { return a < b ? Edge{a, b, w} : Edge{b, a, w}; }

inline bool edge_less(const Edge& a, const Edge& b) { return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v); }

template <RotateSurface G>
void mark(G& g, Vertex v) {
  g.rotate(v, Dir::out);
}

/// Emits every pendant edge at v, i.e. every degree-1 neighbour.
template <RotateSurface G>
void emit_pendants(G& g, Vertex v, MstResult& out) {
  auto cur = g.scan(v, Dir::out);
  while (auto e = cur.next()) {
    if (g.degree(e->v, Dir::out) == 1) {
      out.edges.push_back(normalised(v, e->v, e->w));
      out.total += e->w;
    }
  }
}

}  // namespace detail

/// True iff v is in the tree. Costs one scan of v's list.
template <RotateSurface G>
bool is_marked(G& g, Vertex v) {
  if (g.degree(v, Dir::out) < 2) throw GraphError("marking needs degree >= 2 at vertex " + std::to_string(v));
  return g.front(v, Dir::out) != detail::min_entry(g, v).v;
}

/// Minimum spanning tree of s's component. Ties are broken by
/// (weight, smaller endpoint, larger endpoint).
template <RotateSurface G>
MstResult mst_rotate(G& g, Vertex s) {
  const auto n = g.vertex_count();
  if (g.directed()) throw GraphError("spanning trees need an undirected graph");
  if (s < 1 || s > n) throw GraphError("source out of range: " + std::to_string(s));
  auto vars = g.meter().reserve(16 * word_bits(n));

  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v, Dir::out) >= 2) g.rotate_to(v, Dir::out, detail::min_entry(g, v).v);
  }

  MstResult out;
  if (g.degree(s, Dir::out) == 0) return out;
  Vertex root = s;
  if (g.degree(s, Dir::out) == 1) {
    const auto e = g.front_entry(s, Dir::out);
    root = e.v;
    if (g.degree(root, Dir::out) == 1) {
      out.edges.push_back(detail::normalised(s, root, e.w));
      out.total = e.w;
      return out;
    }
  }
  detail::mark(g, root);
  detail::emit_pendants(g, root, out);

  for (;;) {
    bool found = false;
    Edge best;
    for (Vertex u = 1; u <= n; ++u) {
      if (g.degree(u, Dir::out) < 2 || is_marked(g, u)) continue;
      auto cur = g.scan(u, Dir::out);
      while (auto e = cur.next()) {
        if (g.degree(e->v, Dir::out) < 2 || !is_marked(g, e->v)) continue;
        const auto cand = detail::normalised(u, e->v, e->w);
        ++g.counter().comparisons;
        if (!found || detail::edge_less(cand, best)) {
          best = cand;
          found = true;
        }
      }
    }
    if (!found) break;
    out.edges.push_back(best);
    out.total += best.w;
    // Exactly one endpoint is unmarked; marking it is a single rotation.
    const Vertex fresh = is_marked(g, best.u) ? best.v : best.u;
    detail::mark(g, fresh);
    detail::emit_pendants(g, fresh, out);
  }
  return out;
}

/// The same algorithm on an implicit graph through the rotation adapter;
/// ARRAY lists are presorted by (weight, label).
inline MstResult mst_implicit(ImplicitGraph& g, Vertex s) {
  if (g.directed()) throw GraphError("spanning trees need an undirected graph");
  auto a = make_rotate_adapter(g, SortKey::weight_label);
  return mst_rotate(a, s);
}

}  // namespace ipg

#endif  // IPG_MST_HPP
