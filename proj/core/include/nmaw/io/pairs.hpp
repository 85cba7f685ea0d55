#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "nmaw/genomics/sequence.hpp"

namespace nmaw::io {

// Pair file: one "<reference>\t<query>" per line, uppercase ACGTN, equal
// lengths throughout. Lines starting with '#' and blank lines are skipped; a
// trailing CR is tolerated.
//
// Errors carry the 1-based line: Error{MalformedLine} for a missing or extra
// tab or a bad symbol, Error{LengthMismatch} for unequal lengths.
genomics::SequencePairBatch parse_pairs(std::istream& in);
// Also Error{IoError} if the file cannot be opened.
genomics::SequencePairBatch parse_pairs(const std::filesystem::path& path);

void write_pairs(std::ostream& out, const genomics::SequencePairBatch& batch);
void write_pairs(const genomics::SequencePairBatch& batch, const std::filesystem::path& path);

}  // namespace nmaw::io
