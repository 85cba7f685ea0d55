#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>

namespace nmaw::io {

struct KeyValueEntry {
  std::string value;
  std::size_t line = 0;  // 1-based
};

using KeyValueMap = std::map<std::string, KeyValueEntry>;

// Flat "key = value" text. Blank lines and lines starting with '#' are
// skipped; whitespace around key and value is trimmed. A line without '=',
// an empty key or a repeated key raises Error{MalformedLine}.
KeyValueMap parse_key_values(std::istream& in);
// Error{IoError} if the file cannot be opened.
KeyValueMap read_key_value_file(const std::filesystem::path& path);

// Typed accessors. Error{MalformedLine} (with the entry's line) when the
// value does not parse completely.
double as_double(const KeyValueEntry& entry, std::string_view key);
long long as_integer(const KeyValueEntry& entry, std::string_view key);
bool as_bool(const KeyValueEntry& entry, std::string_view key);

std::string_view trim(std::string_view text) noexcept;

}  // namespace nmaw::io
