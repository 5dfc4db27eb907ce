#ifndef IPG_TRAVERSAL_HPP
#define IPG_TRAVERSAL_HPP

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/meter.hpp"
#include "ipg/types.hpp"

namespace ipg {

/// Frontier bookkeeping of one BFS phase.
struct PhaseStat {
  std::size_t frontier = 0;
  std::uint64_t frontier_reads = 0;
};

/// Output of a search: vertices in first-visit order.
struct TraversalResult {
  std::vector<Vertex> order;
  /// BFS only: index into `order` where each level begins (level 0 = {s}).
  std::vector<std::size_t> level_starts;
  /// Set by algorithms that require s to reach every vertex when the
  /// emitted order does not cover all n vertices.
  bool failed = false;
  /// Filled by searches that keep an explicit frontier.
  std::vector<PhaseStat> phases;

  /// Per-vertex BFS level derived from level_starts; absent = not emitted.
  std::vector<std::optional<std::size_t>> levels(std::size_t n) const {
    std::vector<std::optional<std::size_t>> lv(n + 1);
    std::size_t level = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      while (level + 1 < level_starts.size() && level_starts[level + 1] <= i) ++level;
      lv[order[i]] = level;
    }
    return lv;
  }
};

/// Operations of the rotate model: a front per list, unit rotations, and a
/// read-only cursor over one cycle from the front.
template <typename G>
concept RotateSurface = requires(G& g, const G& cg, Vertex v, Dir d) {
  { cg.vertex_count() } -> std::convertible_to<std::size_t>;
  { cg.directed() } -> std::convertible_to<bool>;
  { cg.degree(v, d) } -> std::convertible_to<std::size_t>;
  { g.front(v, d) } -> std::convertible_to<Vertex>;
  g.rotate(v, d);
  g.rotate_to(v, d, v);
  { g.scan(v, d).next() } -> std::same_as<std::optional<AdjEntry>>;
  { g.counter() } -> std::same_as<OpCounter&>;
  { g.meter() } -> std::same_as<WorkspaceMeter&>;
};

/// Surfaces that can also move one element to the front while keeping the
/// relative order of the others (implicit-model adapters).
template <typename G>
concept FrontInsertSurface = RotateSurface<G> && requires(G& g, Vertex v, Dir d) {
  g.move_to_front(v, d, v);
};

}  // namespace ipg

#endif  // IPG_TRAVERSAL_HPP
