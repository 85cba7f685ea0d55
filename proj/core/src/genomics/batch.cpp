#include "nmaw/genomics/batch.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "nmaw/error.hpp"

namespace nmaw::genomics {

namespace {

void filter_slice(std::span<const SequencePair> pairs, std::span<PairOutcome> out,
                  int threshold) {
  PairFilter filter(threshold);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      out[i].decision = filter(pairs[i].reference, pairs[i].query);
    } catch (const Error& e) {
      out[i].error = e.what();
    }
  }
}

}  // namespace

BatchResult filter_batch(std::span<const SequencePair> pairs, int threshold,
                         unsigned workers) {
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be positive");
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");

  BatchResult result;
  result.outcomes.resize(pairs.size());
  const auto start = std::chrono::steady_clock::now();

  const std::size_t n = pairs.size();
  const std::size_t slices = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  if (slices == 1) {
    filter_slice(pairs, result.outcomes, threshold);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(slices);
    const std::size_t base = n / slices;
    const std::size_t extra = n % slices;
    std::size_t begin = 0;
    for (std::size_t s = 0; s < slices; ++s) {
      const std::size_t count = base + (s < extra ? 1 : 0);
      threads.emplace_back(filter_slice, pairs.subspan(begin, count),
                           std::span<PairOutcome>(result.outcomes).subspan(begin, count),
                           threshold);
      begin += count;
    }
    for (auto& t : threads) t.join();
  }

  const auto stop = std::chrono::steady_clock::now();
  auto& stats = result.stats;
  stats.pairs = n;
  for (const auto& o : result.outcomes) {
    if (!o.ok()) {
      ++stats.errors;
    } else if (o.decision->accepted()) {
      ++stats.accepted;
    } else {
      ++stats.rejected;
    }
  }
  if (n > 0) {
    stats.accept_rate = static_cast<double>(stats.accepted) / static_cast<double>(n);
    stats.reject_rate = static_cast<double>(stats.rejected) / static_cast<double>(n);
  }
  stats.wall_seconds = std::chrono::duration<double>(stop - start).count();
  if (stats.wall_seconds > 0.0) {
    stats.mpairs_per_second = static_cast<double>(n) / stats.wall_seconds / 1e6;
  }
  return result;
}

}  // namespace nmaw::genomics
