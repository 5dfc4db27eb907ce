#ifndef IPG_CODECS_HPP
#define IPG_CODECS_HPP

#include <algorithm>
#include <array>
#include <cstdint>

#include "ipg/implicit_graph.hpp"
#include "ipg/types.hpp"

// Values stored by permuting distinct adjacency elements in place.

namespace ipg {

// --- one bit in two adjacent positions: ascending = 0, descending = 1 ---

inline bool decode_bit(ImplicitGraph& g, Vertex v, Dir d, std::size_t i) {
  if (i + 1 > g.degree(v, d)) throw GraphError("bit pair overflows sequence");
  const auto x = g.read_at(v, d, i);
  const auto y = g.read_at(v, d, i + 1);
  ++g.counter().comparisons;
  if (x == y) throw GraphError("bit pair holds equal values");
  return x > y;
}

inline void encode_bit(ImplicitGraph& g, Vertex v, Dir d, std::size_t i, bool b) {
  if (decode_bit(g, v, d, i) != b) g.swap(v, d, i, i + 1);
}

inline bool decode_bit(ImplicitGraph& g, Vertex v, std::size_t i) {
  return decode_bit(g, v, Dir::out, i);
}
inline void encode_bit(ImplicitGraph& g, Vertex v, std::size_t i, bool b) {
  encode_bit(g, v, Dir::out, i, b);
}

// --- four colors in the first three positions ---

enum class Color4 : std::uint8_t { white, gray1, gray2, black };

namespace detail {

/// Rank pattern (0 = smallest) of positions 1..3 for each color.
inline constexpr std::array<std::array<std::uint8_t, 3>, 4> kColorPattern{{
    {0, 1, 2},  // white: identity
    {1, 0, 2},  // gray1
    {0, 2, 1},  // gray2
    {1, 2, 0},  // black
}};

}  // namespace detail

inline Color4 decode_color4(ImplicitGraph& g, Vertex v, Dir d = Dir::out) {
  if (g.degree(v, d) < 3) throw GraphError("color code needs degree >= 3");
  std::array<Vertex, 3> x{g.read_at(v, d, 1), g.read_at(v, d, 2), g.read_at(v, d, 3)};
  std::array<std::uint8_t, 3> rank{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (j != i && x[j] < x[i]) ++rank[i];
    }
  }
  g.counter().comparisons += 3;
  for (std::size_t c = 0; c < detail::kColorPattern.size(); ++c) {
    if (detail::kColorPattern[c] == rank) return static_cast<Color4>(c);
  }
  throw GraphError("positions 1..3 of vertex " + std::to_string(v) + " hold no color code");
}

/// Permutes positions 1..3 into the pattern for `c`. No swap happens when
/// the pattern is already present.
inline void encode_color4(ImplicitGraph& g, Vertex v, Dir d, Color4 c) {
  if (g.degree(v, d) < 3) throw GraphError("color code needs degree >= 3");
  std::array<Vertex, 3> x{g.read_at(v, d, 1), g.read_at(v, d, 2), g.read_at(v, d, 3)};
  std::array<Vertex, 3> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  g.counter().comparisons += 3;
  const auto& pattern = detail::kColorPattern[static_cast<std::size_t>(c)];
  // Selection by swaps: place the wanted value at each position in turn.
  for (std::size_t pos = 0; pos < 3; ++pos) {
    const auto want = sorted[pattern[pos]];
    if (x[pos] == want) continue;
    const auto at = static_cast<std::size_t>(std::find(x.begin() + pos, x.end(), want) - x.begin());
    g.swap(v, d, pos + 1, at + 1);
    std::swap(x[pos], x[at]);
  }
}
inline void encode_color4(ImplicitGraph& g, Vertex v, Color4 c) {
  encode_color4(g, v, Dir::out, c);
}

// --- w-bit integers in 2w positions, least significant bit first ---

inline std::uint64_t decode_ptr(ImplicitGraph& g, Vertex v, Dir d, std::size_t start,
                                std::size_t width) {
  if (width > 63) throw GraphError("pointer width too large");
  if (start < 1 || start + 2 * width - 1 > g.degree(v, d)) {
    throw GraphError("pointer field overflows sequence of vertex " + std::to_string(v));
  }
  auto cur = g.scan(v, d);
  for (std::size_t i = 1; i < start; ++i) cur.next();
  std::uint64_t val = 0;
  for (std::size_t k = 0; k < width; ++k) {
    const auto x = cur.next()->v;
    const auto y = cur.next()->v;
    ++g.counter().comparisons;
    if (x > y) val |= std::uint64_t{1} << k;
  }
  return val;
}

inline void encode_ptr(ImplicitGraph& g, Vertex v, Dir d, std::size_t start, std::uint64_t val,
                       std::size_t width) {
  if (width < 64 && val >> width != 0) throw GraphError("pointer value overflows field width");
  const auto old = decode_ptr(g, v, d, start, width);
  for (std::size_t k = 0; k < width; ++k) {
    if (((old ^ val) >> k & 1U) != 0) g.swap(v, d, start + 2 * k, start + 2 * k + 1);
  }
}

}  // namespace ipg

#endif  // IPG_CODECS_HPP
