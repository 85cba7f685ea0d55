#include "nmaw/io/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nmaw/error.hpp"

namespace nmaw::io {

namespace {

std::string quote_if_needed(const std::string& text) {
  if (text.find_first_of(",\"\r\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace

std::string format_csv_value(const CsvValue& value) {
  struct Visitor {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g", v);
      return buf;
    }
    std::string operator()(const std::string& v) const { return quote_if_needed(v); }
  };
  return std::visit(Visitor{}, value);
}

void write_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c != 0) out << ',';
    out << quote_if_needed(table.header[c]);
  }
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "csv row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                      " cells, header has " + std::to_string(table.header.size()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out << ',';
      out << format_csv_value(row[c]);
    }
    out << '\n';
  }
}

void write_csv(const CsvTable& table, const std::filesystem::path& path) {
  // Format fully first so a bad row leaves no half-written file behind.
  std::ostringstream text;
  write_csv(text, table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  out << text.str();
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

CsvText read_csv(std::istream& in) {
  CsvText result;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  std::size_t record_line = 1;

  const auto end_record = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
    if (result.header.empty() && result.rows.empty()) {
      result.header = std::move(record);
    } else {
      if (record.size() != result.header.size()) {
        throw Error(ErrorKind::MalformedLine, "record has " + std::to_string(record.size()) +
                                                  " fields, header has " +
                                                  std::to_string(result.header.size()),
                    record_line);
      }
      result.rows.push_back(std::move(record));
    }
    record.clear();
    record_line = line;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field += '"';
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        record.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (in_quotes) throw Error(ErrorKind::MalformedLine, "unterminated quote", record_line);
  if (field_started || !record.empty()) end_record();
  return result;
}

CsvText read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return read_csv(in);
}

}  // namespace nmaw::io
