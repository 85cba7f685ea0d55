#include "nmaw/genomics/chip_maze.hpp"

#include "nmaw/error.hpp"

namespace nmaw::genomics {

ChipMaze::ChipMaze(int threshold, std::size_t length)
    : threshold_(threshold), cols_(length) {
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");
  entries_.assign(rows() * cols_, 1);
}

void check_filter_inputs(const DnaSequence& reference, const DnaSequence& query,
                         int threshold) {
  if (reference.size() != query.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "reference length " + std::to_string(reference.size()) +
                    " != query length " + std::to_string(query.size()));
  }
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");
  if (2 * static_cast<std::size_t>(threshold) + 1 > reference.size()) {
    throw Error(ErrorKind::ThresholdTooLarge,
                "2E+1 = " + std::to_string(2 * threshold + 1) + " exceeds length " +
                    std::to_string(reference.size()));
  }
}

ChipMaze build_chip_maze(const DnaSequence& reference, const DnaSequence& query,
                         int threshold, KernelCounters* counters) {
  check_filter_inputs(reference, query, threshold);
  const std::size_t m = reference.size();
  const auto len = static_cast<long>(m);
  ChipMaze maze(threshold, m);

  std::uint64_t compares = 0;
  for (std::size_t r = 0; r < maze.rows(); ++r) {
    const long offset = maze.diagonal_offset(r);
    for (std::size_t j = 0; j < m; ++j) {
      const long q = static_cast<long>(j) + offset;
      if (q < 0 || q >= len) continue;  // stays an obstacle
      ++compares;
      maze.set(r, j, query[static_cast<std::size_t>(q)] != reference[j]);
    }
  }

  if (counters) {
    counters->flops += compares;
    counters->bytes_read += 2 * compares;
    counters->bytes_written += maze.rows() * m;
  }
  return maze;
}

}  // namespace nmaw::genomics
