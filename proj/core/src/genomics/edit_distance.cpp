#include "nmaw/genomics/edit_distance.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "nmaw/error.hpp"

namespace nmaw::genomics {

std::optional<int> edit_distance_banded(std::string_view reference, std::string_view query,
                                        int threshold) {
  if (reference.size() != query.size()) {
    throw Error(ErrorKind::LengthMismatch,
                "reference length " + std::to_string(reference.size()) +
                    " != query length " + std::to_string(query.size()));
  }
  if (threshold < 0) throw Error(ErrorKind::InvalidArgument, "negative edit threshold");

  const long n = static_cast<long>(reference.size());
  const long band = threshold;
  const int out_of_band = std::numeric_limits<int>::max() / 2;

  // prev/cur hold row i of the DP for columns j in [i - band, i + band],
  // stored at index j - i + band. Everything outside the band is +inf.
  const std::size_t width = 2 * static_cast<std::size_t>(band) + 1;
  std::vector<int> prev(width, out_of_band);
  std::vector<int> cur(width, out_of_band);
  for (long j = 0; j <= std::min(band, n); ++j) prev[static_cast<std::size_t>(j + band)] = static_cast<int>(j);

  for (long i = 1; i <= n; ++i) {
    std::fill(cur.begin(), cur.end(), out_of_band);
    int row_min = out_of_band;
    const long lo = std::max(0L, i - band);
    const long hi = std::min(n, i + band);
    for (long j = lo; j <= hi; ++j) {
      const auto idx = static_cast<std::size_t>(j - i + band);
      int best = out_of_band;
      if (j == 0) {
        best = static_cast<int>(i);
      } else {
        // Diagonal predecessor (i-1, j-1) has the same band index.
        const int diag = prev[idx];
        const bool match = reference[static_cast<std::size_t>(i - 1)] ==
                           query[static_cast<std::size_t>(j - 1)];
        best = diag + (match ? 0 : 1);
        if (idx > 0) best = std::min(best, cur[idx - 1] + 1);  // (i, j-1)
      }
      if (idx + 1 < width) best = std::min(best, prev[idx + 1] + 1);  // (i-1, j)
      cur[idx] = std::min(best, out_of_band);
      row_min = std::min(row_min, cur[idx]);
    }
    if (row_min > threshold) return std::nullopt;
    std::swap(prev, cur);
  }

  const int distance = prev[static_cast<std::size_t>(band)];
  if (distance > threshold) return std::nullopt;
  return distance;
}

}  // namespace nmaw::genomics
