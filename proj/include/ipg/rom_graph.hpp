#ifndef IPG_ROM_GRAPH_HPP
#define IPG_ROM_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/meter.hpp"
#include "ipg/pointer_structure.hpp"
#include "ipg/rotate_search.hpp"
#include "ipg/traversal.hpp"

namespace ipg {

/// Read-only adjacency arrays with one movable cursor per out-list. The
/// cursor plays the role of the list head, so rotate-model searches run
/// unchanged while the input is never written. In-lists are read from
/// position 0 and cannot be rotated.
class RomGraph {
public:
  class Cursor {
  public:
    std::optional<AdjEntry> next() {
      if (step_ == list_->size()) return std::nullopt;
      const auto& e = (*list_)[(start_ + step_) % list_->size()];
      ++step_;
      ++g_->counter_.element_reads;
      return e;
    }

  private:
    friend class RomGraph;
    Cursor(RomGraph* g, const std::vector<AdjEntry>* list, std::size_t start) : g_(g), list_(list), start_(start) {}
    RomGraph* g_;
    const std::vector<AdjEntry>* list_;
    std::size_t start_;
    std::size_t step_ = 0;
  };

  explicit RomGraph(const GraphData& gd) : gd_(&gd), ptr_(out_degrees(gd)) {}

  std::size_t vertex_count() const noexcept { return gd_->n; }
  bool directed() const noexcept { return gd_->directed; }
  std::size_t degree(Vertex v, Dir d = Dir::out) const { return gd_->degree(v, d); }

  AdjEntry front_entry(Vertex v, Dir d = Dir::out) {
    const auto& list = gd_->adj(v, d);
    if (list.empty()) throw GraphError("front of degree-0 vertex " + std::to_string(v));
    ++counter_.element_reads;
    return list[head(v, d)];
  }
  Vertex front(Vertex v, Dir d = Dir::out) { return front_entry(v, d).v; }

  void rotate(Vertex v, Dir d = Dir::out) {
    if (d != Dir::out) throw GraphError("in-lists have no cursor");
    const auto len = degree(v, d);
    if (len == 0) throw GraphError("rotate on degree-0 vertex " + std::to_string(v));
    ptr_.set(v, (ptr_.get(v) + 1) % len);
    ++counter_.rotations;
  }

  std::size_t rotate_to(Vertex v, Dir d, Vertex target) {
    const auto len = degree(v, d);
    for (std::size_t steps = 0; steps < len; ++steps) {
      if (front(v, d) == target) return steps;
      rotate(v, d);
    }
    throw GraphError("vertex " + std::to_string(target) + " not in list of " + std::to_string(v));
  }
  std::size_t rotate_to(Vertex v, Vertex target) { return rotate_to(v, Dir::out, target); }

  Cursor scan(Vertex v, Dir d = Dir::out) { return Cursor(this, &gd_->adj(v, d), head(v, d)); }

  /// Bits of the cursor fields, delimiters and select directory.
  std::size_t pointer_bits() const noexcept { return ptr_.storage_bits(); }

  OpCounter& counter() noexcept { return counter_; }
  WorkspaceMeter& meter() noexcept { return meter_; }

private:
  static std::vector<std::size_t> out_degrees(const GraphData& gd) {
    std::vector<std::size_t> deg;
    deg.reserve(gd.n);
    for (Vertex v = 1; v <= gd.n; ++v) deg.push_back(gd.degree(v, Dir::out));
    return deg;
  }

  std::size_t head(Vertex v, Dir d) const { return d == Dir::out && degree(v, d) > 0 ? ptr_.get(v) : 0; }

  const GraphData* gd_;
  PointerStructure ptr_;
  OpCounter counter_;
  WorkspaceMeter meter_;
};

/// Lex-DFS in the read-only model: the trit search driven by cursors.
inline TraversalResult rom_dfs(RomGraph& g, Vertex s, Mode mode) {
  auto cursors = g.meter().reserve(g.pointer_bits());
  return lex_dfs_trits(g, s, mode);
}

}  // namespace ipg

#endif  // IPG_ROM_GRAPH_HPP
