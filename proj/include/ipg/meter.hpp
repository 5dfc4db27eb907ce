#ifndef IPG_METER_HPP
#define IPG_METER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ipg/types.hpp"

namespace ipg {

/// Unit-operation counters. Monotone during a run.
struct OpCounter {
  std::uint64_t rotations = 0;
  std::uint64_t swaps = 0;
  std::uint64_t element_reads = 0;
  std::uint64_t comparisons = 0;

  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

inline OpCounter operator-(const OpCounter& a, const OpCounter& b) {
  return {a.rotations - b.rotations, a.swaps - b.swaps,
          a.element_reads - b.element_reads, a.comparisons - b.comparisons};
}

/// Tracks extra bits held by an algorithm. Every algorithm variable goes
/// through reserve(); the peak is what budgets constrain.
class WorkspaceMeter {
public:
  class Reservation {
  public:
    Reservation() = default;
    Reservation(WorkspaceMeter* meter, std::size_t bits) : meter_(meter), bits_(bits) {}
    Reservation(const Reservation&) = delete;
    Reservation& operator=(const Reservation&) = delete;
    Reservation(Reservation&& o) noexcept
        : meter_(std::exchange(o.meter_, nullptr)), bits_(o.bits_) {}
    Reservation& operator=(Reservation&& o) noexcept {
      if (this != &o) {
        reset();
        meter_ = std::exchange(o.meter_, nullptr);
        bits_ = o.bits_;
      }
      return *this;
    }
    ~Reservation() { reset(); }

    void reset() noexcept {
      if (meter_ != nullptr) meter_->release(bits_);
      meter_ = nullptr;
    }
    std::size_t bits() const noexcept { return bits_; }

  private:
    WorkspaceMeter* meter_ = nullptr;
    std::size_t bits_ = 0;
  };

  WorkspaceMeter() = default;
  explicit WorkspaceMeter(std::size_t budget_bits) : budget_(budget_bits) {}

  [[nodiscard]] Reservation reserve(std::size_t bits) {
    const auto next = current_ + bits;
    if (budget_ && next > *budget_) {
      throw BudgetExceeded("workspace of " + std::to_string(next) +
                           " bits exceeds budget " + std::to_string(*budget_));
    }
    current_ = next;
    if (current_ > peak_) peak_ = current_;
    return Reservation(this, bits);
  }

  std::size_t current() const noexcept { return current_; }
  std::size_t peak() const noexcept { return peak_; }
  std::optional<std::size_t> budget() const noexcept { return budget_; }
  void set_budget(std::optional<std::size_t> b) noexcept { budget_ = b; }
  void reset_peak() noexcept { peak_ = current_; }

private:
  void release(std::size_t bits) noexcept { current_ -= bits; }

  std::size_t current_ = 0;
  std::size_t peak_ = 0;
  std::optional<std::size_t> budget_;
};

}  // namespace ipg

#endif  // IPG_METER_HPP
