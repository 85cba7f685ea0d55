#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nmaw/genomics/sequence.hpp"
#include "nmaw/genomics/snake.hpp"

namespace nmaw::genomics {

// Either a decision or the message of the error the pair raised.
struct PairOutcome {
  std::optional<FilterDecision> decision;
  std::string error;

  bool ok() const noexcept { return decision.has_value(); }
};

struct BatchStats {
  std::size_t pairs = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t errors = 0;
  double accept_rate = 0.0;
  double reject_rate = 0.0;
  double wall_seconds = 0.0;
  double mpairs_per_second = 0.0;
};

struct BatchResult {
  std::vector<PairOutcome> outcomes;  // input order
  BatchStats stats;
};

// Splits the pairs into `workers` contiguous, near-equal slices, one thread
// each. Outcomes do not depend on the worker count.
BatchResult filter_batch(std::span<const SequencePair> pairs, int threshold,
                         unsigned workers);

inline BatchResult filter_batch(const SequencePairBatch& batch, int threshold,
                                unsigned workers) {
  return filter_batch(batch.pairs(), threshold, workers);
}

}  // namespace nmaw::genomics
