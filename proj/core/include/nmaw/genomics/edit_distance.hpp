#pragma once

#include <optional>
#include <string_view>

#include "nmaw/genomics/sequence.hpp"

namespace nmaw::genomics {

// Levenshtein distance of two equal-length strings restricted to the diagonal
// band |i - j| <= threshold. Returns nullopt when the distance exceeds
// `threshold`; the band is exact whenever it does not. Throws
// Error{LengthMismatch}.
std::optional<int> edit_distance_banded(std::string_view reference, std::string_view query,
                                        int threshold);

inline std::optional<int> edit_distance_banded(const DnaSequence& reference,
                                               const DnaSequence& query, int threshold) {
  return edit_distance_banded(reference.view(), query.view(), threshold);
}

}  // namespace nmaw::genomics
