#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nmaw {

enum class ErrorKind {
  InvalidArgument,
  InvalidSymbol,
  LengthMismatch,
  ThresholdTooLarge,
  HaloTooSmall,
  DimensionMismatch,
  NonFiniteValue,
  SingularPivot,
  ChannelsExhausted,
  PeCapExceeded,
  UnknownPlatform,
  UnknownBandwidthLabel,
  MalformedLine,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  // 1-based input line for parse errors.
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace nmaw
