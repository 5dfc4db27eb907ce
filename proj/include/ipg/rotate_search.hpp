#ifndef IPG_ROTATE_SEARCH_HPP
#define IPG_ROTATE_SEARCH_HPP

#include <array>
#include <cstddef>
#include <optional>

#include "ipg/traversal.hpp"
#include "ipg/trit_array.hpp"
#include "ipg/types.hpp"

// DFS and BFS in the rotate model. Every algorithm is a template over
// RotateSurface so that the implicit-model adapters reuse it unchanged.

namespace ipg {

/// How a newly discovered vertex gets its parent to the front of its
/// (in-)list: by rotation, or by moving it to the front while the other
/// elements keep their order (adapters only).
enum class ParentPlacement : std::uint8_t { rotate, move_to_front };

/// Directed log-space DFS scheme.
///   min_anchor:      rotate each out-list minimum to the front first and
///                    measure positions relative to it (general DFS).
///   fixed_out_lists: never touch out-lists; positions are physical, which
///                    makes the result the lex-DFS order.
enum class DirectedScheme : std::uint8_t { min_anchor, fixed_out_lists };

struct LogspaceOptions {
  ParentPlacement placement = ParentPlacement::rotate;
  DirectedScheme scheme = DirectedScheme::min_anchor;
};

namespace detail {

inline constexpr std::size_t kNoPos = static_cast<std::size_t>(-1);

template <RotateSurface G>
void check_call(const G& g, Vertex s, Mode mode) {
  if (s < 1 || s > g.vertex_count()) throw GraphError("source out of range: " + std::to_string(s));
  if (g.directed() != (mode == Mode::directed)) {
    throw GraphError("mode " + to_string(mode) + " does not match the graph");
  }
}

template <RotateSurface G>
Dir back_dir(const G& g) {
  return g.directed() ? Dir::in : Dir::out;
}

template <RotateSurface G>
void place_parent(G& g, Vertex v, Dir d, Vertex parent, ParentPlacement how) {
  if constexpr (FrontInsertSurface<G>) {
    if (how == ParentPlacement::move_to_front) {
      g.move_to_front(v, d, parent);
      return;
    }
  }
  g.rotate_to(v, d, parent);
}

/// Offsets from the current front of each target in one cycle scan.
template <RotateSurface G, std::size_t K>
std::array<std::size_t, K> positions(G& g, Vertex v, Dir d, const std::array<Vertex, K>& targets) {
  std::array<std::size_t, K> pos;
  pos.fill(kNoPos);
  auto cur = g.scan(v, d);
  for (std::size_t i = 0; auto e = cur.next(); ++i) {
    for (std::size_t k = 0; k < K; ++k) {
      if (pos[k] == kNoPos && e->v == targets[k]) pos[k] = i;
    }
  }
  return pos;
}

template <RotateSurface G>
Vertex min_label(G& g, Vertex v, Dir d) {
  Vertex m = kNoVertex;
  auto cur = g.scan(v, d);
  while (auto e = cur.next()) {
    ++g.counter().comparisons;
    if (m == kNoVertex || e->v < m) m = e->v;
  }
  return m;
}

/// Steps from u to s following (in-)list fronts, if s is met within `limit`.
template <RotateSurface G>
std::optional<std::size_t> first_hit(G& g, Vertex s, Vertex u, std::size_t limit) {
  const Dir back = back_dir(g);
  Vertex q = u;
  for (std::size_t k = 0;; ++k) {
    if (q == s) return k;
    if (k == limit || g.degree(q, back) == 0) return std::nullopt;
    q = g.front(q, back);
  }
}

}  // namespace detail

/// Lex-DFS with a trit colour array. A vertex's front always names its
/// current child, so the parent of x is the one gray vertex whose front is x.
template <RotateSurface G>
TraversalResult lex_dfs_trits(G& g, Vertex s, Mode mode) {
  detail::check_call(g, s, mode);
  const auto n = g.vertex_count();
  constexpr std::uint8_t kWhite = 0, kGray = 1, kBlack = 2;
  TritArray color(n);
  auto colors = g.meter().reserve(color.storage_bits());
  auto vars = g.meter().reserve(8 * word_bits(n));
  const Dir back = detail::back_dir(g);

  TraversalResult r;
  r.order.push_back(s);
  color.set(s, kGray);
  Vertex x = s;
  for (;;) {
    Vertex next = kNoVertex;
    auto cur = g.scan(x, Dir::out);
    while (auto e = cur.next()) {
      if (color.get(e->v) == kWhite) {
        next = e->v;
        break;
      }
    }
    if (next != kNoVertex) {
      g.rotate_to(x, Dir::out, next);
      color.set(next, kGray);
      r.order.push_back(next);
      x = next;
      continue;
    }
    color.set(x, kBlack);
    if (x == s) break;
    Vertex parent = kNoVertex;
    auto pc = g.scan(x, back);
    while (auto e = pc.next()) {
      if (color.get(e->v) == kGray && g.front(e->v, Dir::out) == x) {
        parent = e->v;
        break;
      }
    }
    if (parent == kNoVertex) throw GraphError("lost the parent of vertex " + std::to_string(x));
    x = parent;
  }
  return r;
}
template <RotateSurface G>
TraversalResult lex_dfs_trits(G& g, Vertex s) {
  return lex_dfs_trits(g, s, g.directed() ? Mode::directed : Mode::undirected);
}

/// General DFS with one visited bit per vertex. Undirected: each discovered
/// vertex rotates its parent to the front, and the parent of x is the first
/// visited vertex after x's front whose own front is x. Directed: the parent
/// is the in-list front and out-lists only move forward, so the order is lex.
template <RotateSurface G>
TraversalResult dfs_linear_bits(G& g, Vertex s, Mode mode) {
  detail::check_call(g, s, mode);
  const auto n = g.vertex_count();
  BitArray visited(n);
  auto bits = g.meter().reserve(visited.storage_bits());
  auto vars = g.meter().reserve(8 * word_bits(n));
  const bool directed = g.directed();

  TraversalResult r;
  r.order.push_back(s);
  visited.set(s, true);
  Vertex x = s;
  for (;;) {
    Vertex next = kNoVertex;
    auto cur = g.scan(x, Dir::out);
    while (auto e = cur.next()) {
      if (!visited.get(e->v)) {
        next = e->v;
        break;
      }
    }
    if (next != kNoVertex) {
      g.rotate_to(x, Dir::out, next);
      visited.set(next, true);
      r.order.push_back(next);
      g.rotate_to(next, directed ? Dir::in : Dir::out, x);
      x = next;
      continue;
    }
    if (x == s) break;
    if (directed) {
      x = g.front(x, Dir::in);
      continue;
    }
    // The front of x is its parent unless x has children; scan the rest of
    // the cycle first and fall back to the front itself.
    Vertex parent = kNoVertex;
    auto pc = g.scan(x, Dir::out);
    const Vertex first = pc.next()->v;
    while (auto e = pc.next()) {
      if (visited.get(e->v) && g.front(e->v, Dir::out) == x) {
        parent = e->v;
        break;
      }
    }
    if (parent == kNoVertex) parent = first;
    x = parent;
  }
  return r;
}
template <RotateSurface G>
TraversalResult dfs_linear_bits(G& g, Vertex s) {
  return dfs_linear_bits(g, s, g.directed() ? Mode::directed : Mode::undirected);
}

namespace detail {

template <RotateSurface G>
TraversalResult dfs_logspace_undirected(G& g, Vertex s, ParentPlacement placement) {
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(16 * word_bits(n));
  TraversalResult r;
  r.order.push_back(s);
  if (g.degree(s, Dir::out) == 0) {
    r.failed = r.order.size() < n;
    return r;
  }
  const Vertex s_first = g.front(s, Dir::out);
  std::size_t d = 0;
  std::size_t max = 0;
  Vertex x = s;
  bool fresh = true;

  auto gray_at = [&](std::size_t k) {
    Vertex q = s;
    for (std::size_t i = 0; i < k; ++i) q = g.front(q, Dir::out);
    return q;
  };
  auto is_gray = [&](Vertex y) {
    Vertex q = s;
    for (std::size_t i = 0;; ++i) {
      if (q == y) return true;
      if (i == d) return false;
      q = g.front(q, Dir::out);
    }
  };
  // y is a finished descendant of x iff the front walk from y climbs to x
  // through a child c of x that was explored before y's position.
  auto is_black = [&](Vertex y, Vertex anchor, bool inclusive) {
    Vertex q = y;
    Vertex prev = kNoVertex;
    for (std::size_t k = 0;; ++k) {
      if (q == x) break;
      if (k == max - d) return false;
      prev = q;
      q = g.front(q, Dir::out);
    }
    if (!inclusive && prev == anchor) return false;
    const auto pos = positions<G, 3>(g, x, Dir::out, {anchor, prev, y});
    const auto deg = g.degree(x, Dir::out);
    auto idx = [&](std::size_t p) { return (p + deg - pos[0]) % deg; };
    return idx(pos[1]) < idx(pos[2]);
  };

  for (;;) {
    const bool inclusive = x == s;
    const Vertex anchor = inclusive ? s_first : gray_at(d - 1);
    Vertex next = kNoVertex;
    auto cur = g.scan(x, Dir::out);
    if (!(fresh && inclusive)) cur.next();
    for (bool first = true; auto e = cur.next(); first = false) {
      const Vertex y = e->v;
      if (y == anchor && !(first && fresh && inclusive)) break;
      if (is_gray(y) || is_black(y, anchor, inclusive)) continue;
      next = y;
      break;
    }
    if (next != kNoVertex) {
      g.rotate_to(x, Dir::out, next);
      place_parent(g, next, Dir::out, x, placement);
      r.order.push_back(next);
      ++d;
      if (d > max) max = d;
      x = next;
      fresh = true;
      continue;
    }
    if (x == s) break;
    const Vertex parent = anchor;
    g.rotate_to(x, Dir::out, parent);
    --d;
    x = parent;
    fresh = false;
  }
  r.failed = r.order.size() < n;
  return r;
}

template <RotateSurface G>
TraversalResult dfs_logspace_min_anchor(G& g, Vertex s, ParentPlacement placement) {
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(16 * word_bits(n));
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v, Dir::out) > 0) g.rotate_to(v, Dir::out, min_label(g, v, Dir::out));
  }
  TraversalResult r;
  r.order.push_back(s);
  std::size_t d = 0;
  std::size_t max = 0;
  Vertex x = s;
  bool fresh = true;

  auto is_gray = [&](Vertex y) {
    Vertex q = s;
    for (std::size_t i = 0;; ++i) {
      if (q == y) return true;
      if (i == d) return false;
      q = g.front(q, Dir::out);
    }
  };
  auto rel_less = [&](Vertex z, Vertex a, Vertex b) {
    const Vertex m = min_label(g, z, Dir::out);
    const auto pos = positions<G, 3>(g, z, Dir::out, {m, a, b});
    const auto deg = g.degree(z, Dir::out);
    return (pos[1] + deg - pos[0]) % deg < (pos[2] + deg - pos[0]) % deg;
  };
  // Climb in-list fronts from y to the first gray vertex z; c is the vertex
  // just below z. y is finished iff z already explored c before its current
  // child (or before y itself when z = x).
  auto is_black = [&](Vertex y) {
    Vertex q = y;
    Vertex prev = kNoVertex;
    for (std::size_t k = 0;; ++k) {
      if (is_gray(q)) break;
      if (k == max || g.degree(q, Dir::in) == 0) return false;
      prev = q;
      q = g.front(q, Dir::in);
    }
    const Vertex z = q;
    return rel_less(z, prev, z == x ? y : g.front(z, Dir::out));
  };

  for (;;) {
    Vertex next = kNoVertex;
    if (g.degree(x, Dir::out) > 0) {
      const Vertex anchor = min_label(g, x, Dir::out);
      auto cur = g.scan(x, Dir::out);
      if (!fresh) cur.next();
      for (bool first = true; auto e = cur.next(); first = false) {
        const Vertex y = e->v;
        if (y == anchor && !(first && fresh)) break;
        if (is_gray(y) || is_black(y)) continue;
        next = y;
        break;
      }
    }
    if (next != kNoVertex) {
      g.rotate_to(x, Dir::out, next);
      place_parent(g, next, Dir::in, x, placement);
      r.order.push_back(next);
      ++d;
      if (d > max) max = d;
      x = next;
      fresh = true;
      continue;
    }
    if (x == s) break;
    x = g.front(x, Dir::in);
    --d;
    fresh = false;
  }
  r.failed = r.order.size() < n;
  return r;
}

template <RotateSurface G>
TraversalResult dfs_logspace_fixed_out(G& g, Vertex s, ParentPlacement placement) {
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(16 * word_bits(n));
  TraversalResult r;
  r.order.push_back(s);
  std::size_t d = 0;
  std::size_t max = 0;
  Vertex x = s;
  Vertex resume_after = kNoVertex;

  // Gray path is read upward from x through in-list fronts.
  auto is_gray = [&](Vertex y) {
    Vertex q = x;
    for (std::size_t i = 0;; ++i) {
      if (q == y) return true;
      if (i == d) return false;
      q = g.front(q, Dir::in);
    }
  };
  auto gray_child = [&](Vertex z) {
    Vertex q = x;
    Vertex prev = kNoVertex;
    while (q != z) {
      prev = q;
      q = g.front(q, Dir::in);
    }
    return prev;
  };
  auto is_black = [&](Vertex y) {
    Vertex q = y;
    Vertex prev = kNoVertex;
    for (std::size_t k = 0;; ++k) {
      if (is_gray(q)) break;
      if (k == max || g.degree(q, Dir::in) == 0) return false;
      prev = q;
      q = g.front(q, Dir::in);
    }
    const Vertex z = q;
    const Vertex bound = z == x ? y : gray_child(z);
    const auto pos = positions<G, 2>(g, z, Dir::out, {prev, bound});
    return pos[0] < pos[1];
  };

  for (;;) {
    Vertex next = kNoVertex;
    auto cur = g.scan(x, Dir::out);
    if (resume_after != kNoVertex) {
      while (auto e = cur.next()) {
        if (e->v == resume_after) break;
      }
    }
    while (auto e = cur.next()) {
      if (is_gray(e->v) || is_black(e->v)) continue;
      next = e->v;
      break;
    }
    if (next != kNoVertex) {
      place_parent(g, next, Dir::in, x, placement);
      r.order.push_back(next);
      ++d;
      if (d > max) max = d;
      x = next;
      resume_after = kNoVertex;
      continue;
    }
    if (x == s) break;
    resume_after = x;
    x = g.front(x, Dir::in);
    --d;
  }
  r.failed = r.order.size() < n;
  return r;
}

}  // namespace detail

/// General DFS in O(lg n) bits. Colours are recomputed: gray by walking the
/// gray path, black by a front walk back to x plus a position test. Expects
/// s to reach every vertex; otherwise the reachable prefix is returned with
/// `failed` set.
template <RotateSurface G>
TraversalResult dfs_logspace(G& g, Vertex s, Mode mode, LogspaceOptions opt = {}) {
  detail::check_call(g, s, mode);
  if (!g.directed()) return detail::dfs_logspace_undirected(g, s, opt.placement);
  if (opt.scheme == DirectedScheme::fixed_out_lists) {
    return detail::dfs_logspace_fixed_out(g, s, opt.placement);
  }
  return detail::dfs_logspace_min_anchor(g, s, opt.placement);
}
template <RotateSurface G>
TraversalResult dfs_logspace(G& g, Vertex s) {
  return dfs_logspace(g, s, g.directed() ? Mode::directed : Mode::undirected);
}

/// BFS with one visited bit per vertex. Each discovered vertex keeps its
/// parent at the (in-)list front; the level of a visited vertex is the
/// length of its front walk to s.
template <RotateSurface G>
TraversalResult bfs_linear_bits(G& g, Vertex s, Mode mode) {
  detail::check_call(g, s, mode);
  const auto n = g.vertex_count();
  BitArray visited(n);
  auto bits = g.meter().reserve(visited.storage_bits());
  auto vars = g.meter().reserve(8 * word_bits(n));
  const Dir back = detail::back_dir(g);

  TraversalResult r;
  r.order.push_back(s);
  r.level_starts.push_back(0);
  visited.set(s, true);
  for (std::size_t dist = 0;; ++dist) {
    const auto before = r.order.size();
    for (Vertex v = 1; v <= n; ++v) {
      if (!visited.get(v) || detail::first_hit(g, s, v, dist) != dist) continue;
      auto cur = g.scan(v, Dir::out);
      while (auto e = cur.next()) {
        if (visited.get(e->v)) continue;
        visited.set(e->v, true);
        g.rotate_to(e->v, back, v);
        r.order.push_back(e->v);
      }
    }
    if (r.order.size() == before) break;
    r.level_starts.push_back(before);
  }
  return r;
}
template <RotateSurface G>
TraversalResult bfs_linear_bits(G& g, Vertex s) {
  return bfs_linear_bits(g, s, g.directed() ? Mode::directed : Mode::undirected);
}

/// BFS in O(lg n) bits. During phase d a vertex u counts as visited iff its
/// front walk reaches s within d steps, or its front is a level-d vertex
/// with a smaller label than the one being expanded (discovered earlier in
/// this phase). Expects s to reach every vertex.
template <RotateSurface G>
TraversalResult bfs_logspace(G& g, Vertex s, Mode mode) {
  detail::check_call(g, s, mode);
  const auto n = g.vertex_count();
  auto vars = g.meter().reserve(12 * word_bits(n));
  const Dir back = detail::back_dir(g);

  TraversalResult r;
  r.order.push_back(s);
  r.level_starts.push_back(0);
  for (std::size_t dist = 0;; ++dist) {
    const auto before = r.order.size();
    bool found = false;
    for (Vertex v = 1; v <= n; ++v) {
      if (detail::first_hit(g, s, v, dist) != dist) continue;
      auto cur = g.scan(v, Dir::out);
      while (auto e = cur.next()) {
        const Vertex u = e->v;
        if (detail::first_hit(g, s, u, dist)) continue;
        const Vertex w = g.front(u, back);
        if (w < v && detail::first_hit(g, s, w, dist) == dist) continue;
        g.rotate_to(u, back, v);
        r.order.push_back(u);
        found = true;
      }
    }
    if (!found) break;
    r.level_starts.push_back(before);
  }
  r.failed = r.order.size() < n;
  return r;
}
template <RotateSurface G>
TraversalResult bfs_logspace(G& g, Vertex s) {
  return bfs_logspace(g, s, g.directed() ? Mode::directed : Mode::undirected);
}

}  // namespace ipg

#endif  // IPG_ROTATE_SEARCH_HPP
