#ifndef IPG_IMPLICIT_SEARCH_HPP
#define IPG_IMPLICIT_SEARCH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>

#include "ipg/codecs.hpp"
#include "ipg/implicit_graph.hpp"
#include "ipg/rotate_adapter.hpp"
#include "ipg/rotate_search.hpp"
#include "ipg/traversal.hpp"
#include "ipg/types.hpp"

// DFS and BFS in the implicit model. Visited marks live in the order of
// adjacency elements:
//   degree >= 3  parent at position 1, visited bit in positions 2-3
//   degree 2     visited bit in the order of the two neighbours
//   degree 1     no mark; such a vertex is met exactly once (from its only
//                neighbour) and is emitted on contact

namespace ipg {

namespace detail {

inline void check_implicit_call(const ImplicitGraph& g, Vertex s, Mode mode) {
  if (s < 1 || s > g.vertex_count()) throw GraphError("source out of range: " + std::to_string(s));
  if (g.directed() != (mode == Mode::directed)) {
    throw GraphError("mode " + to_string(mode) + " does not match the graph");
  }
}

/// 1-based position of `target` in v's sequence, 0 if absent.
inline std::size_t position_of(ImplicitGraph& g, Vertex v, Dir d, Vertex target) {
  auto cur = g.scan(v, d);
  for (std::size_t k = 1; auto e = cur.next(); ++k) {
    if (e->v == target) return k;
  }
  return 0;
}

/// The neighbour of a degree-2 vertex that is not `from`.
inline Vertex other_neighbour(ImplicitGraph& g, Vertex v, Vertex from) {
  const Vertex a = g.read_at(v, Dir::out, 1);
  return a != from ? a : g.read_at(v, Dir::out, 2);
}

/// Visited marks of the undirected implicit searches.
class ImplicitMarks {
public:
  ImplicitMarks(ImplicitGraph& g, Vertex s) : g_(g), s_(s) {
    for (Vertex v = 1; v <= g.vertex_count(); ++v) {
      const auto d = g.degree(v);
      if (d >= 3) encode_bit(g, v, 2, false);
      if (d == 2) encode_bit(g, v, 1, false);
    }
  }

  bool visited(Vertex u) {
    if (u == s_) return true;
    const auto d = g_.degree(u);
    if (d >= 3) return decode_bit(g_, u, 2);
    if (d == 2) return decode_bit(g_, u, 1);
    return false;
  }

  void mark(Vertex u, Vertex parent) {
    const auto d = g_.degree(u);
    if (d >= 3) {
      g_.swap(u, Dir::out, 1, position_of(g_, u, Dir::out, parent));
      encode_bit(g_, u, 2, true);
    } else if (d == 2) {
      encode_bit(g_, u, 1, true);
    }
  }

private:
  ImplicitGraph& g_;
  Vertex s_;
};

inline TraversalResult dfs_implicit_undirected(ImplicitGraph& g, Vertex s) {
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(16 * word_bits(n));
  ImplicitMarks marks(g, s);
  auto deg = [&](Vertex v) { return g.degree(v); };

  TraversalResult r;
  r.order.push_back(s);
  Vertex x = s;
  std::size_t start = 1;
  for (;;) {
    Vertex next = kNoVertex;
    Vertex next_parent = kNoVertex;
    auto cur = g.scan(x);
    for (std::size_t k = 1; k < start; ++k) cur.next();
    while (auto e = cur.next()) {
      const Vertex y = e->v;
      if (marks.visited(y)) continue;
      if (deg(y) == 1) {
        r.order.push_back(y);
        continue;
      }
      if (deg(y) >= 3) {
        next = y;
        next_parent = x;
        break;
      }
      // Degree-2 chain: emit it as a path up to the first vertex that is
      // not an unvisited degree-2 vertex.
      Vertex prev = x;
      Vertex c = y;
      while (c != s && deg(c) == 2 && !marks.visited(c)) {
        marks.mark(c, prev);
        r.order.push_back(c);
        const Vertex nb = other_neighbour(g, c, prev);
        prev = c;
        c = nb;
      }
      if (marks.visited(c)) continue;
      if (deg(c) == 1) {
        r.order.push_back(c);
        continue;
      }
      next = c;
      next_parent = prev;
      break;
    }
    if (next != kNoVertex) {
      marks.mark(next, next_parent);
      r.order.push_back(next);
      x = next;
      start = 2;
      continue;
    }
    if (x == s) break;
    // Back up through any chain to the vertex whose scan is to be resumed.
    Vertex came = x;
    Vertex z = g.read_at(x, 1);
    while (z != s && deg(z) == 2) {
      const Vertex nb = other_neighbour(g, z, came);
      came = z;
      z = nb;
    }
    start = position_of(g, z, Dir::out, came) + 1;
    x = z;
  }
  return r;
}

inline TraversalResult bfs_implicit_undirected(ImplicitGraph& g, Vertex s) {
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(16 * word_bits(n));
  ImplicitMarks marks(g, s);
  auto deg = [&](Vertex v) { return g.degree(v); };

  // Length of the parent walk from q (reached after `steps` steps, coming
  // from `came`) to s, if within `limit`. Degree-2 vertices pass on to the
  // neighbour they were not entered from.
  auto walk = [&](Vertex q, Vertex came, std::size_t steps, std::size_t limit) -> std::optional<std::size_t> {
    for (;;) {
      if (q == s) return steps;
      if (steps == limit) return std::nullopt;
      const Vertex nx = deg(q) == 2 ? other_neighbour(g, q, came) : g.read_at(q, 1);
      came = q;
      q = nx;
      ++steps;
    }
  };
  // Exact BFS level of a visited vertex when it is at most `limit`: every
  // walk follows real edges, and one branch follows the BFS parents.
  auto level_of = [&](Vertex v, std::size_t limit) -> std::optional<std::size_t> {
    if (v == s) return 0;
    if (limit == 0) return std::nullopt;
    if (deg(v) != 2) return walk(g.read_at(v, 1), v, 1, limit);
    const auto a = walk(g.read_at(v, 1), v, 1, limit);
    const auto b = walk(g.read_at(v, 2), v, 1, limit);
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
  };

  TraversalResult r;
  r.order.push_back(s);
  r.level_starts.push_back(0);
  for (std::size_t dist = 0;; ++dist) {
    const auto before = r.order.size();
    for (Vertex v = 1; v <= n; ++v) {
      if (v == s) {
        if (dist != 0) continue;
      } else if (deg(v) <= 1 || !marks.visited(v) || level_of(v, dist) != dist) {
        continue;
      }
      auto cur = g.scan(v);
      while (auto e = cur.next()) {
        if (marks.visited(e->v)) continue;
        marks.mark(e->v, v);
        r.order.push_back(e->v);
      }
    }
    if (r.order.size() == before) break;
    r.level_starts.push_back(before);
  }
  return r;
}

}  // namespace detail

/// Lex-DFS in O(lg n) bits. The log-space colour tests run over a shift
/// adapter; each discovered vertex has its parent moved to the front with
/// the other elements kept in order, so the original order drives the
/// search. ARRAY graphs are sorted first, so their result is lex with
/// respect to ascending labels.
inline TraversalResult lex_dfs_implicit(ImplicitGraph& g, Vertex s, Mode mode) {
  detail::check_implicit_call(g, s, mode);
  if (g.variant() == ImplicitVariant::array) sort_adjacency(g, SortKey::label);
  RotateAdapter a(g, AdapterKind::shift);
  LogspaceOptions opt{.placement = ParentPlacement::move_to_front, .scheme = DirectedScheme::fixed_out_lists};
  return dfs_logspace(a, s, mode, opt);
}

/// General DFS of the reachable set in O(lg n) bits with marks stored in
/// element order. Digraphs use the lex search.
inline TraversalResult dfs_implicit_logspace(ImplicitGraph& g, Vertex s, Mode mode) {
  detail::check_implicit_call(g, s, mode);
  if (g.directed()) {
    RotateAdapter a(g, AdapterKind::shift);
    auto r = dfs_logspace(a, s, mode,
                          {.placement = ParentPlacement::move_to_front, .scheme = DirectedScheme::fixed_out_lists});
    r.failed = false;
    return r;
  }
  return detail::dfs_implicit_undirected(g, s);
}

/// BFS of the reachable set in O(lg n) bits. Digraphs run the rotate-model
/// log-space BFS over an adapter.
inline TraversalResult bfs_implicit_logspace(ImplicitGraph& g, Vertex s, Mode mode) {
  detail::check_implicit_call(g, s, mode);
  if (g.directed()) {
    auto a = make_rotate_adapter(g);
    return bfs_logspace(a, s, mode);
  }
  return detail::bfs_implicit_undirected(g, s);
}

/// BFS with four colours held in positions 1-3 of each (in-)sequence. Each
/// phase expands every gray1 vertex (exploration), then promotes gray2 to
/// gray1 and emits it (consolidation). Undirected graphs may not contain
/// degree-2 vertices; in digraphs every vertex other than s needs in-degree
/// 0 or at least 3. A source without room for a code keeps its colour in a
/// flag.
inline TraversalResult bfs_implicit_4color(ImplicitGraph& g, Vertex s, Mode mode) {
  detail::check_implicit_call(g, s, mode);
  const auto n = g.vertex_count();
  const bool directed = g.directed();
  const Dir cd = directed ? Dir::in : Dir::out;
  for (Vertex v = 1; v <= n; ++v) {
    const auto d = g.degree(v, cd);
    if (!directed && d == 2) throw GraphError("degree-2 vertex " + std::to_string(v) + " has no colour code");
    if (directed && v != s && (d == 1 || d == 2)) {
      throw GraphError("in-degree of vertex " + std::to_string(v) + " is too small for a colour code");
    }
  }
  auto vars = g.meter().reserve(12 * word_bits(n));
  auto coded = [&](Vertex v) { return g.degree(v, cd) >= 3; };
  const bool s_coded = coded(s);
  bool s_black = false;
  for (Vertex v = 1; v <= n; ++v) {
    if (coded(v)) encode_color4(g, v, cd, v == s ? Color4::gray1 : Color4::white);
  }
  auto color = [&](Vertex v) {
    if (v == s && !s_coded) return s_black ? Color4::black : Color4::gray1;
    return coded(v) ? decode_color4(g, v, cd) : Color4::white;
  };

  TraversalResult r;
  r.order.push_back(s);
  r.level_starts.push_back(0);
  for (;;) {
    const auto before = r.order.size();
    for (Vertex v = 1; v <= n; ++v) {
      if (color(v) != Color4::gray1) continue;
      auto cur = g.scan(v, Dir::out);
      while (auto e = cur.next()) {
        const Vertex u = e->v;
        if (color(u) != Color4::white) continue;
        if (coded(u)) {
          encode_color4(g, u, cd, Color4::gray2);
        } else {
          r.order.push_back(u);  // degree 1: met only from its neighbour
        }
      }
      if (v == s && !s_coded) {
        s_black = true;
      } else {
        encode_color4(g, v, cd, Color4::black);
      }
    }
    for (Vertex v = 1; v <= n; ++v) {
      if (coded(v) && decode_color4(g, v, cd) == Color4::gray2) {
        encode_color4(g, v, cd, Color4::gray1);
        r.order.push_back(v);
      }
    }
    if (r.order.size() == before) break;
    r.level_starts.push_back(before);
  }
  return r;
}

/// Minimum (in-)degree that leaves room for the colour triple and one
/// ceil(lg n)-bit pointer after it.
inline std::size_t ptrlist_min_degree(std::size_t n) { return 2 * lg_budget(n) + 3; }

/// Four-colour BFS whose gray1 frontier is a linked list threaded through
/// pointer fields at positions 4..3+2w (w = ceil(lg n)). A field stores the
/// next label minus one; the last vertex points to itself. Exploration walks
/// the list, and consolidation rebuilds it in label order while promoting
/// gray2 vertices.
inline TraversalResult bfs_implicit_ptrlist(ImplicitGraph& g, Vertex s, Mode mode) {
  detail::check_implicit_call(g, s, mode);
  const auto n = g.vertex_count();
  const Dir cd = g.directed() ? Dir::in : Dir::out;
  const auto w = lg_budget(n);
  const auto need = ptrlist_min_degree(n);
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v, cd) < need) {
      throw GraphError("vertex " + std::to_string(v) + " has degree below " + std::to_string(need));
    }
  }
  auto vars = g.meter().reserve(12 * word_bits(n));
  constexpr std::size_t kField = 4;
  for (Vertex v = 1; v <= n; ++v) encode_color4(g, v, cd, v == s ? Color4::gray1 : Color4::white);
  encode_ptr(g, s, cd, kField, s - 1, w);
  Vertex head = s;

  TraversalResult r;
  r.order.push_back(s);
  r.level_starts.push_back(0);
  for (;;) {
    PhaseStat stat;
    for (Vertex v = head;;) {
      auto cur = g.scan(v, Dir::out);
      while (auto e = cur.next()) {
        if (decode_color4(g, e->v, cd) == Color4::white) encode_color4(g, e->v, cd, Color4::gray2);
      }
      encode_color4(g, v, cd, Color4::black);
      ++stat.frontier;
      const auto reads = g.counter().element_reads;
      const auto next = static_cast<Vertex>(decode_ptr(g, v, cd, kField, w) + 1);
      stat.frontier_reads += g.counter().element_reads - reads;
      if (next == v) break;
      v = next;
    }
    r.phases.push_back(stat);

    const auto before = r.order.size();
    Vertex tail = kNoVertex;
    for (Vertex v = 1; v <= n; ++v) {
      if (decode_color4(g, v, cd) != Color4::gray2) continue;
      encode_color4(g, v, cd, Color4::gray1);
      r.order.push_back(v);
      if (tail == kNoVertex) {
        head = v;
      } else {
        encode_ptr(g, tail, cd, kField, v - 1, w);
      }
      tail = v;
    }
    if (tail == kNoVertex) break;
    encode_ptr(g, tail, cd, kField, tail - 1, w);
    r.level_starts.push_back(before);
  }
  return r;
}

}  // namespace ipg

#endif  // IPG_IMPLICIT_SEARCH_HPP
