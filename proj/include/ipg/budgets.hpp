#ifndef IPG_BUDGETS_HPP
#define IPG_BUDGETS_HPP

#include <cstddef>
#include <numeric>
#include <span>

#include "ipg/types.hpp"

// Workspace budgets in bits. The constants are fixed; tests assert the
// metered peak of every run against these formulas.

namespace ipg::budget {

/// Multiplier on ceil(lg n) for the O(1)-words part of every algorithm.
inline constexpr std::size_t kWordsC = 64;

inline constexpr std::size_t words(std::size_t n) noexcept { return kWordsC * lg_budget(n); }

/// Colour array in trits (five per byte) plus O(1) words.
inline constexpr std::size_t trits(std::size_t n) noexcept { return (8 * n + 4) / 5 + words(n); }

/// One bit per vertex plus O(1) words.
inline constexpr std::size_t linear(std::size_t n) noexcept { return n + words(n); }

inline constexpr std::size_t logspace(std::size_t n) noexcept { return words(n); }

/// Read-only-memory DFS: pointer fields (with delimiters and select
/// directory) plus the trit bound.
inline std::size_t rom(std::span<const std::size_t> degrees) {
  const std::size_t fields = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0},
                                             [](std::size_t acc, std::size_t d) {
                                               const auto w = ceil_lg(d);
                                               return acc + (w == 0 ? 1 : w);
                                             });
  return 4 * fields + trits(degrees.size());
}

}  // namespace ipg::budget

#endif  // IPG_BUDGETS_HPP
