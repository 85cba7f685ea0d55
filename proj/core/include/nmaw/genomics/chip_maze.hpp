#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nmaw/counters.hpp"
#include "nmaw/genomics/sequence.hpp"

namespace nmaw::genomics {

// (2E+1) x m match/obstacle matrix. Row r (0-based) compares R[j] with
// Q[j + diagonal_offset(r)]: rows 0..E-1 are the upper diagonals -1..-E,
// row E is the main diagonal, rows E+1..2E are the lower diagonals +1..+E.
// Entries are 0 (free) or 1 (obstacle).
class ChipMaze {
 public:
  // All-obstacle maze of the given shape.
  ChipMaze(int threshold, std::size_t length);

  int threshold() const noexcept { return threshold_; }
  std::size_t rows() const noexcept { return 2 * static_cast<std::size_t>(threshold_) + 1; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint8_t at(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * cols_ + col];
  }
  void set(std::size_t row, std::size_t col, bool obstacle) noexcept {
    entries_[row * cols_ + col] = obstacle ? 1 : 0;
  }
  std::span<const std::uint8_t> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }

  int diagonal_offset(std::size_t row) const noexcept {
    const int r = static_cast<int>(row);
    return r < threshold_ ? -(r + 1) : r - threshold_;
  }

 private:
  int threshold_;
  std::size_t cols_;
  std::vector<std::uint8_t> entries_;
};

// Checks the shared preconditions of maze construction and filtering.
// Throws Error{LengthMismatch} or Error{ThresholdTooLarge} (2E+1 > m), and
// Error{InvalidArgument} for E < 0.
void check_filter_inputs(const DnaSequence& reference, const DnaSequence& query,
                         int threshold);

// Materializes every entry. A comparison whose query index falls outside the
// sequence is an obstacle.
ChipMaze build_chip_maze(const DnaSequence& reference, const DnaSequence& query,
                         int threshold, KernelCounters* counters = nullptr);

}  // namespace nmaw::genomics
