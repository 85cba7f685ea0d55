#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace nmaw::io {

// Empty cell, integer, float or text.
using CsvValue = std::variant<std::monostate, std::int64_t, double, std::string>;
using CsvRow = std::vector<CsvValue>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// Floats use printf "%.6g" (so output is byte-stable); text is quoted when it
// holds a comma, quote, CR or LF, with quotes doubled.
std::string format_csv_value(const CsvValue& value);

// Header line then one line per row, LF endings. A row whose width differs
// from the header raises Error{InvalidArgument}.
void write_csv(std::ostream& out, const CsvTable& table);
// As above; Error{IoError} if the file cannot be written.
void write_csv(const CsvTable& table, const std::filesystem::path& path);

// Raw cells: first record is the header. Quoted fields may span lines.
// Error{MalformedLine} on an unterminated quote or a ragged record.
struct CsvText {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};
CsvText read_csv(std::istream& in);
CsvText read_csv(const std::filesystem::path& path);

}  // namespace nmaw::io
