#ifndef IPG_POINTER_STRUCTURE_HPP
#define IPG_POINTER_STRUCTURE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ipg/types.hpp"

namespace ipg {

/// Bit vector with a two-level sampled select directory: every 64th one has
/// its absolute position stored, every 8th one its offset from the sample.
/// A query reads two samples and then at most 8 ones' worth of words.
class SelectBitVector {
public:
  SelectBitVector() = default;
  explicit SelectBitVector(std::vector<bool> const& bits) : size_(bits.size()) {
    words_.assign((size_ + 63) / 64, 0);
    for (std::size_t i = 0; i < size_; ++i) {
      if (bits[i]) {
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
        ++ones_;
      }
    }
    build_directory();
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t ones() const noexcept { return ones_; }
  bool get(std::size_t pos) const { return (words_[(pos - 1) / 64] >> ((pos - 1) % 64) & 1U) != 0; }

  /// 1-based position of the i-th one; select(0) = 0.
  std::size_t select(std::size_t i) const {
    if (i == 0) return 0;
    if (i > ones_) throw GraphError("select beyond number of ones");
    const auto k = (i - 1) / kBlock;
    std::size_t pos0 = super_[k / kPerSuper] + block_[k];  // 0-based position of one #(k*8+1)
    std::size_t remaining = (i - 1) % kBlock;
    std::size_t w = pos0 / 64;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (pos0 % 64));
    for (;;) {
      const auto c = static_cast<std::size_t>(std::popcount(word));
      if (remaining < c) break;
      remaining -= c;
      word = words_[++w];
    }
    for (std::size_t r = 0; r < remaining; ++r) word &= word - 1;
    return w * 64 + static_cast<std::size_t>(std::countr_zero(word)) + 1;
  }

  /// Bits held by the payload plus the directory.
  std::size_t storage_bits() const noexcept { return size_ + directory_bits_; }
  std::size_t directory_bits() const noexcept { return directory_bits_; }

private:
  static constexpr std::size_t kBlock = 8;
  static constexpr std::size_t kPerSuper = 8;  // blocks per superblock (64 ones)

  void build_directory() {
    std::size_t seen = 0;
    std::size_t max_rel = 0;
    for (std::size_t p = 0; p < size_; ++p) {
      if ((words_[p / 64] >> (p % 64) & 1U) == 0) continue;
      if (seen % (kBlock * kPerSuper) == 0) super_.push_back(p);
      if (seen % kBlock == 0) {
        block_.push_back(p - super_.back());
        max_rel = std::max(max_rel, block_.back());
      }
      ++seen;
    }
    directory_bits_ = super_.size() * word_bits(size_) + block_.size() * word_bits(max_rel);
  }

  std::size_t size_ = 0;
  std::size_t ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::size_t> super_;
  std::vector<std::size_t> block_;
  std::size_t directory_bits_ = 0;
};

/// One variable-width cursor per adjacency list, addressed through select on
/// a delimiter vector B. Field i has width max(1, ceil(lg d_i)).
class PointerStructure {
public:
  explicit PointerStructure(std::span<const std::size_t> degrees) : degrees_(degrees.begin(), degrees.end()) {
    std::vector<bool> b;
    for (auto d : degrees_) {
      const auto w = field_width(d);
      for (std::size_t k = 1; k < w; ++k) b.push_back(false);
      b.push_back(true);
    }
    delim_ = SelectBitVector(b);
    payload_.assign((b.size() + 63) / 64, 0);
  }

  static std::size_t field_width(std::size_t degree) noexcept {
    const auto w = ceil_lg(degree);
    return w == 0 ? 1 : w;
  }

  std::size_t count() const noexcept { return degrees_.size(); }

  std::uint64_t get(std::size_t i) const {
    const auto [lo, width] = field(i);
    std::uint64_t val = 0;
    for (std::size_t k = 0; k < width; ++k) {
      const auto p = lo + k;
      val |= (payload_[p / 64] >> (p % 64) & 1U) << k;
    }
    return val;
  }

  void set(std::size_t i, std::uint64_t val) {
    const auto [lo, width] = field(i);
    const auto bound = std::max<std::size_t>(degrees_[i - 1], 1);
    if (val >= bound) {
      throw GraphError("pointer value " + std::to_string(val) + " out of range for field " +
                       std::to_string(i));
    }
    for (std::size_t k = 0; k < width; ++k) {
      const auto p = lo + k;
      const auto mask = std::uint64_t{1} << (p % 64);
      if ((val >> k & 1U) != 0) {
        payload_[p / 64] |= mask;
      } else {
        payload_[p / 64] &= ~mask;
      }
    }
  }

  const SelectBitVector& delimiters() const noexcept { return delim_; }

  std::string delimiter_string() const {
    std::string s;
    for (std::size_t p = 1; p <= delim_.size(); ++p) s.push_back(delim_.get(p) ? '1' : '0');
    return s;
  }

  /// B, its select directory, and P.
  std::size_t storage_bits() const noexcept { return delim_.storage_bits() + delim_.size(); }

private:
  /// 0-based first bit and width of field i (1-based).
  std::pair<std::size_t, std::size_t> field(std::size_t i) const {
    if (i < 1 || i > degrees_.size()) throw GraphError("pointer index out of range");
    const auto lo = delim_.select(i - 1);  // 1-based end of previous field = 0-based start
    const auto hi = delim_.select(i);
    return {lo, hi - lo};
  }

  std::vector<std::size_t> degrees_;
  SelectBitVector delim_;
  std::vector<std::uint64_t> payload_;
};

inline PointerStructure build_pointer_structure(std::span<const std::size_t> degrees) {
  return PointerStructure(degrees);
}

}  // namespace ipg

#endif  // IPG_POINTER_STRUCTURE_HPP
