#ifndef IPG_ROTATE_GRAPH_HPP
#define IPG_ROTATE_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/meter.hpp"
#include "ipg/types.hpp"

namespace ipg {

/// Circular adjacency lists whose only mutable state is one head index per
/// list. The element and successor arrays are fixed at construction; every
/// head movement goes through rotate() and is counted.
class RotateGraph {
public:
  /// Read-only walk over one full cycle starting at the current front.
  class Cursor {
  public:
    std::optional<AdjEntry> next() {
      if (remaining_ == 0) return std::nullopt;
      const auto e = g_->elems_[idx_];
      idx_ = g_->next_[idx_];
      --remaining_;
      ++g_->counter_.element_reads;
      return e;
    }
    std::size_t remaining() const noexcept { return remaining_; }

  private:
    friend class RotateGraph;
    Cursor(RotateGraph* g, std::size_t idx, std::size_t remaining)
        : g_(g), idx_(idx), remaining_(remaining) {}
    RotateGraph* g_;
    std::size_t idx_;
    std::size_t remaining_;
  };

  explicit RotateGraph(const GraphData& gd) : n_(gd.n), directed_(gd.directed) {
    const std::size_t lists = directed_ ? 2 * (n_ + 1) : n_ + 1;
    offset_.assign(lists, 0);
    len_.assign(lists, 0);
    head_.assign(lists, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      for (Dir d : directions()) {
        const auto id = list_id(v, d);
        const auto& seq = gd.adj(v, d);
        offset_[id] = elems_.size();
        len_[id] = seq.size();
        head_[id] = offset_[id];
        for (std::size_t i = 0; i < seq.size(); ++i) {
          elems_.push_back(seq[i]);
          next_.push_back(offset_[id] + (i + 1) % seq.size());
        }
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  Mode mode() const noexcept { return directed_ ? Mode::directed : Mode::undirected; }

  std::size_t degree(Vertex v, Dir d = Dir::out) const { return len_[list_id(v, d)]; }

  /// Current front element; one element read. Requires degree >= 1.
  Vertex front(Vertex v, Dir d = Dir::out) { return front_entry(v, d).v; }

  AdjEntry front_entry(Vertex v, Dir d = Dir::out) {
    const auto id = list_id(v, d);
    if (len_[id] == 0) throw GraphError("front of degree-0 vertex " + std::to_string(v));
    ++counter_.element_reads;
    return elems_[head_[id]];
  }

  /// Moves the head one node forward along the fixed successor relation.
  void rotate(Vertex v, Dir d = Dir::out) {
    const auto id = list_id(v, d);
    if (len_[id] == 0) throw GraphError("rotate on degree-0 vertex " + std::to_string(v));
    head_[id] = next_[head_[id]];
    ++counter_.rotations;
  }

  /// Rotates until `target` is the front; returns the number of unit steps.
  std::size_t rotate_to(Vertex v, Dir d, Vertex target) {
    const auto id = list_id(v, d);
    std::size_t idx = head_[id];
    std::size_t steps = 0;
    for (; steps < len_[id]; ++steps) {
      ++counter_.element_reads;
      if (elems_[idx].v == target) break;
      idx = next_[idx];
    }
    if (steps == len_[id]) {
      throw GraphError("vertex " + std::to_string(target) + " not in list of " +
                       std::to_string(v));
    }
    for (std::size_t i = 0; i < steps; ++i) rotate(v, d);
    return steps;
  }
  std::size_t rotate_to(Vertex v, Vertex target) { return rotate_to(v, Dir::out, target); }

  Cursor scan(Vertex v, Dir d = Dir::out) {
    const auto id = list_id(v, d);
    return Cursor(this, head_[id], len_[id]);
  }

  OpCounter& counter() noexcept { return counter_; }
  const OpCounter& counter() const noexcept { return counter_; }
  WorkspaceMeter& meter() noexcept { return meter_; }

  /// Uncounted snapshot of the cyclic sequence from the front (tests, checks).
  std::vector<Vertex> snapshot(Vertex v, Dir d = Dir::out) const {
    const auto id = list_id(v, d);
    std::vector<Vertex> r;
    std::size_t idx = head_[id];
    for (std::size_t i = 0; i < len_[id]; ++i, idx = next_[idx]) r.push_back(elems_[idx].v);
    return r;
  }

  friend bool verify_structure(const RotateGraph& g, const GraphData& original);

private:
  std::vector<Dir> directions() const {
    return directed_ ? std::vector<Dir>{Dir::out, Dir::in} : std::vector<Dir>{Dir::out};
  }
  std::size_t list_id(Vertex v, Dir d) const {
    if (v < 1 || v > n_) throw GraphError("vertex out of range: " + std::to_string(v));
    return directed_ ? 2 * v + (d == Dir::in ? 1 : 0) : v;
  }

  std::size_t n_;
  bool directed_;
  std::vector<AdjEntry> elems_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> len_;
  std::vector<std::size_t> head_;
  OpCounter counter_;
  WorkspaceMeter meter_;
};

/// True iff every list still holds the original elements in the original
/// cyclic order and every head addresses a node of its own list.
inline bool verify_structure(const RotateGraph& g, const GraphData& original) {
  if (g.n_ != original.n || g.directed_ != original.directed) return false;
  for (Vertex v = 1; v <= g.n_; ++v) {
    for (Dir d : g.directions()) {
      const auto id = g.list_id(v, d);
      const auto& seq = original.adj(v, d);
      if (g.len_[id] != seq.size()) return false;
      if (seq.empty()) continue;
      const auto start = g.head_[id];
      if (start < g.offset_[id] || start >= g.offset_[id] + g.len_[id]) return false;
      const auto shift = start - g.offset_[id];
      std::size_t idx = start;
      for (std::size_t i = 0; i < seq.size(); ++i, idx = g.next_[idx]) {
        if (g.elems_[idx] != seq[(shift + i) % seq.size()]) return false;
      }
      if (idx != start) return false;
    }
  }
  return true;
}

}  // namespace ipg

#endif  // IPG_ROTATE_GRAPH_HPP
