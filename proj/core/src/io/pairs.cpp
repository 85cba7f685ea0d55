#include "nmaw/io/pairs.hpp"

#include <fstream>
#include <string>

#include "nmaw/error.hpp"

namespace nmaw::io {

using genomics::DnaSequence;
using genomics::SequencePairBatch;

namespace {

std::string excerpt(const std::string& line) {
  constexpr std::size_t kMax = 60;
  return line.size() <= kMax ? line : line.substr(0, kMax) + "...";
}

}  // namespace

SequencePairBatch parse_pairs(std::istream& in) {
  SequencePairBatch batch;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw Error(ErrorKind::MalformedLine,
                  "expected <reference>TAB<query>: '" + excerpt(line) + "'", line_no);
    }
    std::string ref = line.substr(0, tab);
    std::string query = line.substr(tab + 1);
    for (const char c : line) {
      if (c != '\t' && !DnaSequence::is_valid_symbol(c)) {
        throw Error(ErrorKind::MalformedLine,
                    std::string("invalid symbol '") + c + "' in '" + excerpt(line) + "'",
                    line_no);
      }
    }
    if (ref.empty() || query.empty()) {
      throw Error(ErrorKind::MalformedLine, "empty sequence in '" + excerpt(line) + "'",
                  line_no);
    }
    if (ref.size() != query.size() ||
        (!batch.empty() && ref.size() != batch.sequence_length())) {
      throw Error(ErrorKind::LengthMismatch,
                  "lengths " + std::to_string(ref.size()) + "/" + std::to_string(query.size()) +
                      (batch.empty() ? std::string()
                                     : ", batch length " +
                                           std::to_string(batch.sequence_length())),
                  line_no);
    }
    batch.add(DnaSequence(std::move(ref)), DnaSequence(std::move(query)));
  }
  return batch;
}

SequencePairBatch parse_pairs(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return parse_pairs(in);
}

void write_pairs(std::ostream& out, const SequencePairBatch& batch) {
  for (const auto& pair : batch.pairs()) {
    out << pair.reference.view() << '\t' << pair.query.view() << '\n';
  }
}

void write_pairs(const SequencePairBatch& batch, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  write_pairs(out, batch);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace nmaw::io
