#pragma once

#include <cstdint>

namespace nmaw {

// Operation and traffic tally of one kernel run. "flops" covers every
// add/sub/mul/div/compare-select on data values (for the genomics filter:
// symbol comparisons and maze scans).
struct KernelCounters {
  std::uint64_t flops = 0;
  std::uint64_t bytes_read = 0;
  std::uint64_t bytes_written = 0;

  std::uint64_t bytes() const noexcept { return bytes_read + bytes_written; }

  // Flops per byte moved; 0 when nothing moved.
  double arithmetic_intensity() const noexcept {
    const auto moved = bytes();
    return moved == 0 ? 0.0 : static_cast<double>(flops) / static_cast<double>(moved);
  }

  KernelCounters& operator+=(const KernelCounters& other) noexcept {
    flops += other.flops;
    bytes_read += other.bytes_read;
    bytes_written += other.bytes_written;
    return *this;
  }

  friend bool operator==(const KernelCounters&, const KernelCounters&) = default;
};

}  // namespace nmaw
