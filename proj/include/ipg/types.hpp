#ifndef IPG_TYPES_HPP
#define IPG_TYPES_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ipg {

/// Vertex labels are 1..n. Zero is never a valid vertex.
using Vertex = std::uint32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = 0;

/// Which adjacency sequence of a vertex is addressed. Undirected graphs
/// have a single sequence per vertex; both directions name it.
enum class Dir : std::uint8_t { out, in };

enum class Mode : std::uint8_t { undirected, directed };

/// Raised for malformed input or violated preconditions on caller data.
class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an algorithm's metered workspace exceeds its budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Smallest k with 2^k >= x; ceil_lg(0) = ceil_lg(1) = 0.
constexpr std::size_t ceil_lg(std::size_t x) noexcept {
  return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

/// ceil(lg n) clamped to at least 1, used in every workspace budget formula.
constexpr std::size_t lg_budget(std::size_t n) noexcept {
  const auto k = ceil_lg(n);
  return k == 0 ? 1 : k;
}

/// Bits in one metered word: enough for any label 0..n or depth < n.
constexpr std::size_t word_bits(std::size_t n) noexcept {
  const auto k = ceil_lg(n + 1);
  return k == 0 ? 1 : k;
}

inline std::string to_string(Mode m) {
  return m == Mode::directed ? "directed" : "undirected";
}

}  // namespace ipg

#endif  // IPG_TYPES_HPP
