#ifndef IPG_TRIT_ARRAY_HPP
#define IPG_TRIT_ARRAY_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "ipg/meter.hpp"
#include "ipg/types.hpp"

namespace ipg {

/// Packed array of base-3 digits, five per byte (3^5 = 243 <= 256).
/// Indices are 1-based to match vertex labels.
class TritArray {
public:
  static constexpr std::size_t kPerByte = 5;

  explicit TritArray(std::size_t n) : n_(n), bytes_((n + kPerByte - 1) / kPerByte, 0) {}

  std::size_t size() const noexcept { return n_; }

  std::uint8_t get(std::size_t i) const {
    check(i);
    const auto k = i - 1;
    return static_cast<std::uint8_t>(bytes_[k / kPerByte] / kPow[k % kPerByte] % 3);
  }

  void set(std::size_t i, std::uint8_t c) {
    check(i);
    if (c > 2) throw GraphError("trit value out of range");
    const auto k = i - 1;
    auto& b = bytes_[k / kPerByte];
    const auto p = kPow[k % kPerByte];
    const auto old = b / p % 3;
    b = static_cast<std::uint8_t>(b + (c - old) * p);
  }

  /// Bits of storage, as charged to a WorkspaceMeter.
  std::size_t storage_bits() const noexcept { return bytes_.size() * 8; }

private:
  static constexpr std::array<std::uint8_t, kPerByte> kPow{1, 3, 9, 27, 81};

  void check(std::size_t i) const {
    if (i < 1 || i > n_) throw GraphError("trit index out of range: " + std::to_string(i));
  }

  std::size_t n_;
  std::vector<std::uint8_t> bytes_;
};

/// Plain bit array with 1-based indices and exact storage accounting.
class BitArray {
public:
  explicit BitArray(std::size_t n) : n_(n), bits_(n + 1, false) {}
  bool get(std::size_t i) const { return bits_.at(i); }
  void set(std::size_t i, bool b) { bits_.at(i) = b; }
  std::size_t size() const noexcept { return n_; }
  std::size_t storage_bits() const noexcept { return n_; }

private:
  std::size_t n_;
  std::vector<bool> bits_;
};

}  // namespace ipg

#endif  // IPG_TRIT_ARRAY_HPP
