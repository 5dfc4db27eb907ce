#ifndef IPG_IMPLICIT_GRAPH_HPP
#define IPG_IMPLICIT_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "ipg/graph_data.hpp"
#include "ipg/meter.hpp"
#include "ipg/types.hpp"

namespace ipg {

/// Cost model of the element storage behind an implicit graph.
///   list:  reading position i walks i nodes; a swap of positions i, j is
///          charged |i - j| adjacent swaps.
///   array: any read or swap is one unit.
enum class ImplicitVariant : std::uint8_t { list, array };

class FaultInjector;

/// Adjacency sequences with fixed heads (position 1 of every sequence never
/// moves) whose only mutation is exchanging two elements of one sequence.
class ImplicitGraph {
public:
  /// Sequential walk from position 1; one read per element in both variants.
  class Cursor {
  public:
    std::optional<AdjEntry> next() {
      if (pos_ > len_) return std::nullopt;
      ++g_->counter_.element_reads;
      return g_->elems_[g_->offset_[id_] + (pos_++) - 1];
    }
    std::size_t position() const noexcept { return pos_; }

  private:
    friend class ImplicitGraph;
    Cursor(ImplicitGraph* g, std::size_t id, std::size_t len) : g_(g), id_(id), len_(len) {}
    ImplicitGraph* g_;
    std::size_t id_;
    std::size_t len_;
    std::size_t pos_ = 1;
  };

  ImplicitGraph(const GraphData& gd, ImplicitVariant variant)
      : n_(gd.n), directed_(gd.directed), weighted_(gd.weighted), variant_(variant) {
    const std::size_t lists = directed_ ? 2 * (n_ + 1) : n_ + 1;
    offset_.assign(lists, 0);
    len_.assign(lists, 0);
    for (Vertex v = 1; v <= n_; ++v) {
      for (Dir d : directions()) {
        const auto id = list_id(v, d);
        offset_[id] = elems_.size();
        len_[id] = gd.adj(v, d).size();
        elems_.insert(elems_.end(), gd.adj(v, d).begin(), gd.adj(v, d).end());
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weighted_; }
  Mode mode() const noexcept { return directed_ ? Mode::directed : Mode::undirected; }
  ImplicitVariant variant() const noexcept { return variant_; }

  std::size_t degree(Vertex v, Dir d = Dir::out) const { return len_[list_id(v, d)]; }

  AdjEntry entry_at(Vertex v, Dir d, std::size_t i) {
    const auto id = checked(v, d, i);
    counter_.element_reads += variant_ == ImplicitVariant::list ? i : 1;
    return elems_[offset_[id] + i - 1];
  }
  Vertex read_at(Vertex v, Dir d, std::size_t i) { return entry_at(v, d, i).v; }
  Vertex read_at(Vertex v, std::size_t i) { return read_at(v, Dir::out, i); }

  void swap(Vertex v, Dir d, std::size_t i, std::size_t j) {
    const auto id = checked(v, d, i);
    checked(v, d, j);
    if (i == j) return;
    std::swap(elems_[offset_[id] + i - 1], elems_[offset_[id] + j - 1]);
    counter_.swaps += variant_ == ImplicitVariant::list ? (i > j ? i - j : j - i) : 1;
  }
  void swap(Vertex v, std::size_t i, std::size_t j) { swap(v, Dir::out, i, j); }

  Cursor scan(Vertex v, Dir d = Dir::out) {
    const auto id = list_id(v, d);
    return Cursor(this, id, len_[id]);
  }

  OpCounter& counter() noexcept { return counter_; }
  const OpCounter& counter() const noexcept { return counter_; }
  WorkspaceMeter& meter() noexcept { return meter_; }

  /// Uncounted copy of a sequence (tests, checks).
  std::vector<Vertex> snapshot(Vertex v, Dir d = Dir::out) const {
    const auto id = list_id(v, d);
    std::vector<Vertex> r;
    for (std::size_t i = 0; i < len_[id]; ++i) r.push_back(elems_[offset_[id] + i].v);
    return r;
  }
  std::vector<AdjEntry> snapshot_entries(Vertex v, Dir d = Dir::out) const {
    const auto id = list_id(v, d);
    return {elems_.begin() + static_cast<std::ptrdiff_t>(offset_[id]),
            elems_.begin() + static_cast<std::ptrdiff_t>(offset_[id] + len_[id])};
  }

  friend bool verify_structure(const ImplicitGraph& g, const GraphData& original);
  friend class FaultInjector;

private:
  std::vector<Dir> directions() const {
    return directed_ ? std::vector<Dir>{Dir::out, Dir::in} : std::vector<Dir>{Dir::out};
  }
  std::size_t list_id(Vertex v, Dir d) const {
    if (v < 1 || v > n_) throw GraphError("vertex out of range: " + std::to_string(v));
    return directed_ ? 2 * v + (d == Dir::in ? 1 : 0) : v;
  }
  std::size_t checked(Vertex v, Dir d, std::size_t i) const {
    const auto id = list_id(v, d);
    if (i < 1 || i > len_[id]) {
      throw GraphError("position " + std::to_string(i) + " out of range for vertex " +
                       std::to_string(v));
    }
    return id;
  }

  std::size_t n_;
  bool directed_;
  bool weighted_;
  ImplicitVariant variant_;
  std::vector<AdjEntry> elems_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> len_;
  OpCounter counter_;
  WorkspaceMeter meter_;
};

/// Test-only back door that bypasses the swap contract.
class FaultInjector {
public:
  static void overwrite(ImplicitGraph& g, Vertex v, Dir d, std::size_t i, Vertex label) {
    const auto id = g.checked(v, d, i);
    g.elems_[g.offset_[id] + i - 1].v = label;
  }
};

/// True iff every sequence holds its original multiset and the sequence
/// layout (owner, head position, length) is unchanged.
inline bool verify_structure(const ImplicitGraph& g, const GraphData& original) {
  if (g.n_ != original.n || g.directed_ != original.directed) return false;
  std::size_t expected_offset = 0;
  auto key = [](const AdjEntry& a, const AdjEntry& b) {
    return a.v != b.v ? a.v < b.v : a.w < b.w;
  };
  for (Vertex v = 1; v <= g.n_; ++v) {
    for (Dir d : g.directions()) {
      const auto id = g.list_id(v, d);
      auto want = original.adj(v, d);
      if (g.offset_[id] != expected_offset || g.len_[id] != want.size()) return false;
      expected_offset += want.size();
      auto have = g.snapshot_entries(v, d);
      std::sort(want.begin(), want.end(), key);
      std::sort(have.begin(), have.end(), key);
      if (want != have) return false;
    }
  }
  return expected_offset == g.elems_.size();
}

}  // namespace ipg

#endif  // IPG_IMPLICIT_GRAPH_HPP
