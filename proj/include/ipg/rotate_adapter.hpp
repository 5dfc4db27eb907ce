#ifndef IPG_ROTATE_ADAPTER_HPP
#define IPG_ROTATE_ADAPTER_HPP

#include <cstddef>
#include <optional>
#include <tuple>

#include "ipg/implicit_graph.hpp"
#include "ipg/types.hpp"

// Rotate-model operations simulated on an implicit graph.

namespace ipg {

enum class SortKey : std::uint8_t { label, weight_label };

/// In-place heapsort of one sequence by swaps, ascending by key.
inline void sort_sequence(ImplicitGraph& g, Vertex v, Dir d, SortKey key) {
  const auto n = g.degree(v, d);
  auto less = [&](std::size_t i, std::size_t j) {
    const auto a = g.entry_at(v, d, i);
    const auto b = g.entry_at(v, d, j);
    ++g.counter().comparisons;
    if (key == SortKey::weight_label) return std::tie(a.w, a.v) < std::tie(b.w, b.v);
    return a.v < b.v;
  };
  auto sift_down = [&](std::size_t root, std::size_t end) {
    for (;;) {
      std::size_t child = 2 * root;
      if (child > end) return;
      if (child + 1 <= end && less(child, child + 1)) ++child;
      if (!less(root, child)) return;
      g.swap(v, d, root, child);
      root = child;
    }
  };
  for (std::size_t i = n / 2; i >= 1; --i) sift_down(i, n);
  for (std::size_t end = n; end > 1; --end) {
    g.swap(v, d, 1, end);
    sift_down(1, end - 1);
  }
}

inline void sort_adjacency(ImplicitGraph& g, SortKey key = SortKey::label) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    sort_sequence(g, v, Dir::out, key);
    if (g.directed()) sort_sequence(g, v, Dir::in, key);
  }
}

/// How the adapter realises a rotation.
///   shift:  physical circular shift by adjacent swaps, d - 1 swaps per unit
///           rotation; the sequence is always the cyclic list from its front.
///   sorted: the sequence is kept sorted except that position 1 and the
///           front's sorted position i are exchanged; a unit rotation is a
///           binary search for i plus at most two swaps. ARRAY only.
enum class AdapterKind : std::uint8_t { shift, sorted };

class RotateAdapter {
public:
  class Cursor {
  public:
    std::optional<AdjEntry> next() {
      if (step_ == len_) return std::nullopt;
      std::size_t pos = step_ + 1;
      if (a_->kind_ == AdapterKind::sorted) {
        const auto k = (front_ - 1 + step_) % len_ + 1;  // sorted index
        pos = k == front_ ? 1 : k == 1 ? front_ : k;
      }
      ++step_;
      return a_->g_->entry_at(v_, d_, pos);
    }

  private:
    friend class RotateAdapter;
    Cursor(RotateAdapter* a, Vertex v, Dir d, std::size_t len, std::size_t front)
        : a_(a), v_(v), d_(d), len_(len), front_(front) {}
    RotateAdapter* a_;
    Vertex v_;
    Dir d_;
    std::size_t len_;
    std::size_t front_;
    std::size_t step_ = 0;
  };

  RotateAdapter(ImplicitGraph& g, AdapterKind kind, SortKey key = SortKey::label)
      : g_(&g), kind_(kind) {
    if (kind_ == AdapterKind::sorted) {
      if (g.variant() != ImplicitVariant::array) {
        throw GraphError("sorted rotation needs the ARRAY variant");
      }
      sort_adjacency(g, key);
      key_ = key;
    }
  }

  std::size_t vertex_count() const noexcept { return g_->vertex_count(); }
  bool directed() const noexcept { return g_->directed(); }
  std::size_t degree(Vertex v, Dir d = Dir::out) const { return g_->degree(v, d); }
  AdapterKind kind() const noexcept { return kind_; }
  ImplicitGraph& base() noexcept { return *g_; }

  AdjEntry front_entry(Vertex v, Dir d = Dir::out) {
    if (degree(v, d) == 0) throw GraphError("front of degree-0 vertex " + std::to_string(v));
    return g_->entry_at(v, d, 1);
  }
  Vertex front(Vertex v, Dir d = Dir::out) { return front_entry(v, d).v; }

  void rotate(Vertex v, Dir d = Dir::out) {
    const auto len = degree(v, d);
    if (len == 0) throw GraphError("rotate on degree-0 vertex " + std::to_string(v));
    ++g_->counter().rotations;
    if (kind_ == AdapterKind::shift) {
      for (std::size_t k = 1; k < len; ++k) g_->swap(v, d, k, k + 1);
      return;
    }
    const auto i = front_index(v, d);
    if (i == len) {
      g_->swap(v, d, 1, len);
    } else {
      g_->swap(v, d, 1, i);
      g_->swap(v, d, 1, i + 1);
    }
  }

  /// Rotates until `target` is the front; returns the unit steps taken.
  std::size_t rotate_to(Vertex v, Dir d, Vertex target) {
    const auto len = degree(v, d);
    if (kind_ == AdapterKind::shift) {
      std::size_t steps = 0;
      auto cur = g_->scan(v, d);
      while (auto e = cur.next()) {
        if (e->v == target) break;
        ++steps;
      }
      if (steps == len) throw absent(v, target);
      for (std::size_t k = 0; k < steps; ++k) rotate(v, d);
      return steps;
    }
    // Jump straight to the target's sorted position: undo the current
    // exchange, then exchange position 1 with the target.
    const auto i = front_index(v, d);
    const auto j = sorted_index_of(v, d, i, target);
    if (!j) throw absent(v, target);
    const auto steps = (*j + len - i) % len;
    g_->counter().rotations += steps;
    if (steps != 0) {
      g_->swap(v, d, 1, i);
      g_->swap(v, d, 1, *j);
    }
    return steps;
  }
  std::size_t rotate_to(Vertex v, Vertex target) { return rotate_to(v, Dir::out, target); }

  /// Moves `target` to position 1; the others keep their relative order.
  void move_to_front(Vertex v, Dir d, Vertex target) {
    if (kind_ != AdapterKind::shift) throw GraphError("move_to_front needs a shift adapter");
    std::size_t pos = 0;
    auto cur = g_->scan(v, d);
    for (std::size_t k = 1; auto e = cur.next(); ++k) {
      if (e->v == target) {
        pos = k;
        break;
      }
    }
    if (pos == 0) throw absent(v, target);
    for (std::size_t k = pos; k > 1; --k) g_->swap(v, d, k - 1, k);
  }

  Cursor scan(Vertex v, Dir d = Dir::out) {
    const auto len = degree(v, d);
    const std::size_t i = kind_ == AdapterKind::sorted && len > 0 ? front_index(v, d) : 1;
    return Cursor(this, v, d, len, i);
  }

  OpCounter& counter() noexcept { return g_->counter(); }
  WorkspaceMeter& meter() noexcept { return g_->meter(); }

private:
  static GraphError absent(Vertex v, Vertex target) {
    return GraphError("vertex " + std::to_string(target) + " not in list of " + std::to_string(v));
  }

  bool key_less(const AdjEntry& a, const AdjEntry& b) {
    ++g_->counter().comparisons;
    if (key_ == SortKey::weight_label) return std::tie(a.w, a.v) < std::tie(b.w, b.v);
    return a.v < b.v;
  }

  /// Sorted index of the current front: binary search for the first k >= 2
  /// whose element exceeds the front, which is monotone under the invariant.
  std::size_t front_index(Vertex v, Dir d) {
    const auto len = degree(v, d);
    const auto x = g_->entry_at(v, d, 1);
    std::size_t lo = 2;
    std::size_t hi = len + 1;
    while (lo < hi) {
      const auto mid = lo + (hi - lo) / 2;
      if (key_less(x, g_->entry_at(v, d, mid))) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo - 1;
  }

  std::optional<std::size_t> sorted_index_of(Vertex v, Dir d, std::size_t i, Vertex target) {
    const auto len = degree(v, d);
    auto at = [&](std::size_t k) {
      const auto pos = k == 1 ? i : k == i ? 1 : k;
      return g_->entry_at(v, d, pos);
    };
    // Targets are matched by label, but the order may be by weight; a label
    // search is only valid for the label key.
    if (key_ == SortKey::label) {
      std::size_t lo = 1;
      std::size_t hi = len;
      while (lo <= hi) {
        const auto mid = lo + (hi - lo) / 2;
        const auto e = at(mid);
        ++g_->counter().comparisons;
        if (e.v == target) return mid;
        if (e.v < target) {
          lo = mid + 1;
        } else {
          hi = mid - 1;
        }
      }
      return std::nullopt;
    }
    for (std::size_t k = 1; k <= len; ++k) {
      if (at(k).v == target) return k;
    }
    return std::nullopt;
  }

  ImplicitGraph* g_;
  AdapterKind kind_;
  SortKey key_ = SortKey::label;
};

/// LIST graphs get shift rotations; ARRAY graphs are sorted once and then
/// use the sorted-with-exchange scheme.
inline RotateAdapter make_rotate_adapter(ImplicitGraph& g, SortKey key = SortKey::label) {
  return RotateAdapter(g, g.variant() == ImplicitVariant::array ? AdapterKind::sorted : AdapterKind::shift,
                       key);
}

}  // namespace ipg

#endif  // IPG_ROTATE_ADAPTER_HPP
