#pragma once

#include <cstddef>
#include <vector>

#include "nmaw/counters.hpp"
#include "nmaw/genomics/chip_maze.hpp"
#include "nmaw/genomics/sequence.hpp"

namespace nmaw::genomics {

enum class Verdict { Accept, Reject };

struct FilterDecision {
  Verdict verdict = Verdict::Accept;
  // Obstacles crossed when the search stopped; E+1 on early exit.
  int obstacle_count = 0;
  bool early_exit = false;

  bool accepted() const noexcept { return verdict == Verdict::Accept; }
  friend bool operator==(const FilterDecision&, const FilterDecision&) = default;
};

// One chosen run of free entries: `length` zeros in `row` from column `start`.
struct SnakeSegment {
  std::size_t row = 0;
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const SnakeSegment&, const SnakeSegment&) = default;
};

// Greedy longest-run search over a materialized maze. From the current
// checkpoint every row's run of zeros is measured; the longest wins (ties go
// to the row nearest the main diagonal, then the upper one). The checkpoint
// moves just past the obstacle that ends the winning run, and that obstacle is
// counted. Stops once the checkpoint reaches the last column, or as soon as
// the count exceeds `threshold`.
FilterDecision snake_search(const ChipMaze& maze, int threshold,
                            std::vector<SnakeSegment>* path = nullptr,
                            KernelCounters* counters = nullptr);

// Fused maze construction and search on bit rows. Keeps its scratch buffer
// between calls, so one instance per thread.
class PairFilter {
 public:
  explicit PairFilter(int threshold);

  int threshold() const noexcept { return threshold_; }
  FilterDecision operator()(const DnaSequence& reference, const DnaSequence& query);

 private:
  void build_rows(const DnaSequence& reference, const DnaSequence& query);
  std::size_t run_length(std::size_t row, std::size_t col) const noexcept;

  int threshold_;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> obstacle_bits_;
};

// Same verdict and count as snake_search(build_chip_maze(...)).
FilterDecision filter_pair(const DnaSequence& reference, const DnaSequence& query,
                           int threshold);

}  // namespace nmaw::genomics
