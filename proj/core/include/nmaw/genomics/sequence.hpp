#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmaw::genomics {

// Non-empty DNA string over {A, C, G, T, N}. N matches only N.
class DnaSequence {
 public:
  // Throws Error{InvalidSymbol} on any other character (including lowercase)
  // and Error{InvalidArgument} when empty.
  explicit DnaSequence(std::string symbols);

  static bool is_valid_symbol(char c) noexcept {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T' || c == 'N';
  }

  std::size_t size() const noexcept { return symbols_.size(); }
  char operator[](std::size_t pos) const noexcept { return symbols_[pos]; }
  std::string_view view() const noexcept { return symbols_; }
  const std::string& str() const noexcept { return symbols_; }

  friend bool operator==(const DnaSequence&, const DnaSequence&) = default;

 private:
  std::string symbols_;
};

struct SequencePair {
  DnaSequence reference;
  DnaSequence query;

  friend bool operator==(const SequencePair&, const SequencePair&) = default;
};

// Ordered pairs sharing one length m. Insertion order is preserved.
class SequencePairBatch {
 public:
  SequencePairBatch() = default;

  // Throws Error{LengthMismatch} if the pair is ragged or its length differs
  // from the pairs already in the batch.
  void add(SequencePair pair);
  void add(DnaSequence reference, DnaSequence query) {
    add(SequencePair{std::move(reference), std::move(query)});
  }

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  // 0 while empty.
  std::size_t sequence_length() const noexcept { return length_; }
  const SequencePair& operator[](std::size_t i) const noexcept { return pairs_[i]; }
  std::span<const SequencePair> pairs() const noexcept { return pairs_; }

  friend bool operator==(const SequencePairBatch&, const SequencePairBatch&) = default;

 private:
  std::vector<SequencePair> pairs_;
  std::size_t length_ = 0;
};

}  // namespace nmaw::genomics
