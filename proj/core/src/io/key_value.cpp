#include "nmaw/io/key_value.hpp"

#include <charconv>
#include <fstream>

#include "nmaw/error.hpp"

namespace nmaw::io {

std::string_view trim(std::string_view text) noexcept {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

KeyValueMap parse_key_values(std::istream& in) {
  KeyValueMap map;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::MalformedLine, "expected key = value: '" + std::string(line) + "'",
                  line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty()) throw Error(ErrorKind::MalformedLine, "empty key", line_no);
    const auto [it, fresh] =
        map.emplace(key, KeyValueEntry{std::string(trim(line.substr(eq + 1))), line_no});
    if (!fresh) {
      throw Error(ErrorKind::MalformedLine,
                  "duplicate key '" + key + "' (first on line " +
                      std::to_string(it->second.line) + ")",
                  line_no);
    }
  }
  return map;
}

KeyValueMap read_key_value_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return parse_key_values(in);
}

namespace {

template <typename T>
T parse_number(const KeyValueEntry& entry, std::string_view key) {
  T value{};
  const char* first = entry.value.data();
  const char* last = first + entry.value.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (entry.value.empty() || ec != std::errc{} || ptr != last) {
    throw Error(ErrorKind::MalformedLine,
                std::string(key) + ": not a number: '" + entry.value + "'", entry.line);
  }
  return value;
}

}  // namespace

double as_double(const KeyValueEntry& entry, std::string_view key) {
  return parse_number<double>(entry, key);
}

long long as_integer(const KeyValueEntry& entry, std::string_view key) {
  return parse_number<long long>(entry, key);
}

bool as_bool(const KeyValueEntry& entry, std::string_view key) {
  if (entry.value == "true" || entry.value == "1") return true;
  if (entry.value == "false" || entry.value == "0") return false;
  throw Error(ErrorKind::MalformedLine,
              std::string(key) + ": expected true or false, got '" + entry.value + "'",
              entry.line);
}

}  // namespace nmaw::io
