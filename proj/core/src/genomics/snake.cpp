#include "nmaw/genomics/snake.hpp"

#include <bit>
#include <cstdlib>

#include "nmaw/error.hpp"

namespace nmaw::genomics {

namespace {

// Ranks rows for tie-breaking: distance from the main diagonal, then index.
bool preferred(std::size_t candidate, std::size_t incumbent, std::size_t main_row) {
  const auto dist = [main_row](std::size_t r) {
    return r > main_row ? r - main_row : main_row - r;
  };
  if (dist(candidate) != dist(incumbent)) return dist(candidate) < dist(incumbent);
  return candidate < incumbent;
}

}  // namespace

FilterDecision snake_search(const ChipMaze& maze, int threshold,
                            std::vector<SnakeSegment>* path, KernelCounters* counters) {
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");
  const std::size_t m = maze.cols();
  const std::size_t main_row = static_cast<std::size_t>(maze.threshold());
  if (path) path->clear();

  FilterDecision decision;
  std::uint64_t scanned = 0;
  std::size_t checkpoint = 0;
  while (checkpoint < m) {
    std::size_t best_row = main_row;
    std::size_t best_len = 0;
    bool have_best = false;
    for (std::size_t r = 0; r < maze.rows(); ++r) {
      const auto row = maze.row(r);
      std::size_t len = 0;
      while (checkpoint + len < m && row[checkpoint + len] == 0) ++len;
      scanned += len + (checkpoint + len < m ? 1 : 0);
      if (!have_best || len > best_len ||
          (len == best_len && preferred(r, best_row, main_row))) {
        best_row = r;
        best_len = len;
        have_best = true;
      }
    }
    if (path && best_len > 0) path->push_back({best_row, checkpoint, best_len});

    checkpoint += best_len;
    if (checkpoint >= m) break;

    // Step over the obstacle that ended the run.
    ++decision.obstacle_count;
    ++checkpoint;
    if (decision.obstacle_count > threshold) {
      decision.early_exit = true;
      break;
    }
  }
  decision.verdict =
      decision.obstacle_count <= threshold ? Verdict::Accept : Verdict::Reject;

  if (counters) {
    counters->flops += scanned;
    counters->bytes_read += scanned;
  }
  return decision;
}

PairFilter::PairFilter(int threshold) : threshold_(threshold) {
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");
}

void PairFilter::build_rows(const DnaSequence& reference, const DnaSequence& query) {
  const std::size_t m = reference.size();
  const std::size_t rows = 2 * static_cast<std::size_t>(threshold_) + 1;
  // One spare word so a 64-bit window starting anywhere below m stays in range.
  words_per_row_ = m / 64 + 2;
  obstacle_bits_.assign(rows * words_per_row_, ~std::uint64_t{0});

  const auto len = static_cast<long>(m);
  for (std::size_t r = 0; r < rows; ++r) {
    const long offset = static_cast<int>(r) < threshold_
                            ? -(static_cast<long>(r) + 1)
                            : static_cast<long>(r) - threshold_;
    std::uint64_t* bits = obstacle_bits_.data() + r * words_per_row_;
    for (std::size_t w = 0; w * 64 < m; ++w) {
      std::uint64_t word = 0;
      const std::size_t base = w * 64;
      const std::size_t end = base + 64 < m ? base + 64 : m;
      for (std::size_t j = base; j < end; ++j) {
        const long q = static_cast<long>(j) + offset;
        const bool obstacle =
            q < 0 || q >= len || query[static_cast<std::size_t>(q)] != reference[j];
        word |= std::uint64_t{obstacle} << (j - base);
      }
      // Columns past m stay obstacles so every run stops at the end.
      if (end - base < 64) word |= ~std::uint64_t{0} << (end - base);
      bits[w] = word;
    }
  }
}

std::size_t PairFilter::run_length(std::size_t row, std::size_t col) const noexcept {
  const std::uint64_t* bits = obstacle_bits_.data() + row * words_per_row_;
  std::size_t len = 0;
  for (;;) {
    // Shift the row so `col` sits at bit 0, then count leading free columns.
    const std::size_t w = col >> 6;
    const unsigned shift = col & 63;
    std::uint64_t window = bits[w] >> shift;
    if (shift != 0) window |= bits[w + 1] << (64 - shift);
    if (window != 0) return len + static_cast<std::size_t>(std::countr_zero(window));
    len += 64;
    col += 64;
  }
}

FilterDecision PairFilter::operator()(const DnaSequence& reference, const DnaSequence& query) {
  check_filter_inputs(reference, query, threshold_);
  build_rows(reference, query);

  const std::size_t m = reference.size();
  const std::size_t rows = 2 * static_cast<std::size_t>(threshold_) + 1;
  FilterDecision decision;
  std::size_t checkpoint = 0;
  while (checkpoint < m) {
    std::size_t best = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      const std::size_t len = run_length(r, checkpoint);
      if (len > best) best = len;
    }
    checkpoint += best;
    if (checkpoint >= m) break;
    ++decision.obstacle_count;
    ++checkpoint;
    if (decision.obstacle_count > threshold_) {
      decision.early_exit = true;
      break;
    }
  }
  decision.verdict =
      decision.obstacle_count <= threshold_ ? Verdict::Accept : Verdict::Reject;
  return decision;
}

FilterDecision filter_pair(const DnaSequence& reference, const DnaSequence& query,
                           int threshold) {
  PairFilter filter(threshold);
  return filter(reference, query);
}

}  // namespace nmaw::genomics
