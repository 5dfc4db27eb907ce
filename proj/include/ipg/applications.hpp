#ifndef IPG_APPLICATIONS_HPP
#define IPG_APPLICATIONS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ipg/rotate_graph.hpp"
#include "ipg/search.hpp"

namespace ipg {

// --- reachability and distance ---

/// Whether t is reached by a search from s. Spaces that only admit a BFS
/// use one; otherwise a DFS (lex-DFS for trits and rom).
inline bool st_reachability(const GraphData& gd, Vertex s, Vertex t, Model model = Model::rotate,
                            Space space = Space::log) {
  if (t < 1 || t > gd.n) throw GraphError("target out of range: " + std::to_string(t));
  Algo algo = Algo::dfs;
  if (space == Space::trits || model == Model::rom) algo = Algo::lex_dfs;
  if (space == Space::fourcolor || space == Space::ptrlist) algo = Algo::bfs;
  const auto run = run_search(gd, s, algo, model, space);
  return std::find(run.result.order.begin(), run.result.order.end(), t) != run.result.order.end();
}

/// BFS level of t, or nullopt when s does not reach t.
inline std::optional<std::size_t> shortest_distance(const GraphData& gd, Vertex s, Vertex t,
                                                    Model model = Model::rotate, Space space = Space::log) {
  if (t < 1 || t > gd.n) throw GraphError("target out of range: " + std::to_string(t));
  const auto run = run_search(gd, s, Algo::bfs, model, space);
  return run.result.levels(gd.n)[t];
}

// --- subset problems ---

/// Read-only access to the subset currently encoded in a rotate graph.
/// v is a member iff its front is not its minimum-labelled neighbour.
class SubsetView {
public:
  explicit SubsetView(RotateGraph& g) : g_(&g) {}

  std::size_t vertex_count() const noexcept { return g_->vertex_count(); }

  bool member(Vertex v) const {
    Vertex m = kNoVertex;
    auto cur = g_->scan(v);
    while (auto e = cur.next()) {
      if (m == kNoVertex || e->v < m) m = e->v;
    }
    return g_->front(v) != m;
  }

  template <typename F>
  void for_each_neighbour(Vertex v, F&& f) const {
    auto cur = g_->scan(v);
    while (auto e = cur.next()) f(e->v);
  }

  std::size_t size() const {
    std::size_t k = 0;
    for (Vertex v = 1; v <= vertex_count(); ++v) k += member(v) ? 1 : 0;
    return k;
  }

private:
  RotateGraph* g_;
};

using SubsetPredicate = std::function<bool(const SubsetView&)>;

enum class Objective : std::uint8_t { minimize, maximize };

struct SubsetOptions {
  Objective objective = Objective::minimize;
  /// Polled once per encoding; the search stops when it becomes true.
  const std::atomic<bool>* stop = nullptr;
  /// Called on every encoding of the counting pass.
  std::function<void(const SubsetView&)> on_visit = {};
};

struct SubsetResult {
  std::optional<std::vector<Vertex>> subset;
  std::size_t size = 0;
  std::uint64_t visited = 0;
  bool cancelled = false;
};

namespace detail {

inline Vertex min_neighbour(RotateGraph& g, Vertex v) {
  Vertex m = kNoVertex;
  auto cur = g.scan(v);
  while (auto e = cur.next()) {
    if (m == kNoVertex || e->v < m) m = e->v;
  }
  return m;
}

/// Adds one to the counter held in the fronts, vertex 1 least significant.
/// Returns false on wrap-around to the empty set.
inline bool increment(RotateGraph& g, const SubsetView& view) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (!view.member(v)) {
      g.rotate(v);
      return true;
    }
    g.rotate_to(v, Dir::out, min_neighbour(g, v));
  }
  return false;
}

}  // namespace detail

/// Enumerates all 2^n subsets in place and returns an optimal one that
/// satisfies `pred`. The first pass finds the optimal size; the second
/// stops at the first subset of that size, so the fronts encode it and no
/// n-bit copy is ever held.
inline SubsetResult subset_solve(RotateGraph& g, const SubsetPredicate& pred, const SubsetOptions& opt = {}) {
  const auto n = g.vertex_count();
  if (g.directed()) throw GraphError("subset problems need an undirected graph");
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) < 2) throw GraphError("vertex " + std::to_string(v) + " has degree below 2");
  }
  auto vars = g.meter().reserve(12 * word_bits(n));
  const SubsetView view(g);
  for (Vertex v = 1; v <= n; ++v) g.rotate_to(v, Dir::out, detail::min_neighbour(g, v));

  SubsetResult r;
  std::optional<std::size_t> best;
  auto better = [&](std::size_t k) {
    return !best || (opt.objective == Objective::minimize ? k < *best : k > *best);
  };
  do {
    if (opt.stop != nullptr && opt.stop->load()) {
      r.cancelled = true;
      return r;
    }
    ++r.visited;
    if (opt.on_visit) opt.on_visit(view);
    if (pred(view)) {
      const auto k = view.size();
      if (better(k)) best = k;
    }
  } while (detail::increment(g, view));
  if (!best) return r;

  do {
    if (opt.stop != nullptr && opt.stop->load()) {
      r.cancelled = true;
      return r;
    }
    if (view.size() == *best && pred(view)) break;
  } while (detail::increment(g, view));
  r.size = *best;
  r.subset.emplace();
  for (Vertex v = 1; v <= n; ++v) {
    if (view.member(v)) r.subset->push_back(v);
  }
  return r;
}

/// Every edge has a member endpoint.
inline bool is_vertex_cover(const SubsetView& s) {
  for (Vertex u = 1; u <= s.vertex_count(); ++u) {
    if (s.member(u)) continue;
    bool ok = true;
    s.for_each_neighbour(u, [&](Vertex x) { ok = ok && s.member(x); });
    if (!ok) return false;
  }
  return true;
}

/// Every vertex is a member or has a member neighbour.
inline bool is_dominating_set(const SubsetView& s) {
  for (Vertex u = 1; u <= s.vertex_count(); ++u) {
    if (s.member(u)) continue;
    bool hit = false;
    s.for_each_neighbour(u, [&](Vertex x) { hit = hit || s.member(x); });
    if (!hit) return false;
  }
  return true;
}

inline SubsetResult vertex_cover_min(RotateGraph& g) { return subset_solve(g, is_vertex_cover); }
inline SubsetResult dominating_set_min(RotateGraph& g) { return subset_solve(g, is_dominating_set); }

}  // namespace ipg

#endif  // IPG_APPLICATIONS_HPP
