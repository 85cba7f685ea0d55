#include "nmaw/genomics/sequence.hpp"

#include <algorithm>

#include "nmaw/error.hpp"

namespace nmaw::genomics {

DnaSequence::DnaSequence(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty DNA sequence");
  }
  const auto bad = std::find_if_not(symbols_.begin(), symbols_.end(), is_valid_symbol);
  if (bad != symbols_.end()) {
    throw Error(ErrorKind::InvalidSymbol,
                "symbol '" + std::string(1, *bad) + "' at position " +
                    std::to_string(bad - symbols_.begin()) + " is not one of ACGTN");
  }
}

void SequencePairBatch::add(SequencePair pair) {
  const std::size_t m = pair.reference.size();
  if (pair.query.size() != m) {
    throw Error(ErrorKind::LengthMismatch,
                "reference length " + std::to_string(m) + " != query length " +
                    std::to_string(pair.query.size()));
  }
  if (!pairs_.empty() && m != length_) {
    throw Error(ErrorKind::LengthMismatch,
                "pair length " + std::to_string(m) + " != batch length " +
                    std::to_string(length_));
  }
  length_ = m;
  pairs_.push_back(std::move(pair));
}

}  // namespace nmaw::genomics
