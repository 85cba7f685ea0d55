#include "nmaw/error.hpp"

namespace nmaw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidSymbol: return "InvalidSymbol";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::ThresholdTooLarge: return "ThresholdTooLarge";
    case ErrorKind::HaloTooSmall: return "HaloTooSmall";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonFiniteValue: return "NonFiniteValue";
    case ErrorKind::SingularPivot: return "SingularPivot";
    case ErrorKind::ChannelsExhausted: return "ChannelsExhausted";
    case ErrorKind::PeCapExceeded: return "PeCapExceeded";
    case ErrorKind::UnknownPlatform: return "UnknownPlatform";
    case ErrorKind::UnknownBandwidthLabel: return "UnknownBandwidthLabel";
    case ErrorKind::MalformedLine: return "MalformedLine";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message,
                     std::optional<std::size_t> line) {
  std::string out(to_string(kind));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(decorate(kind, message, line)),
      kind_(kind),
      line_(line) {}

}  // namespace nmaw
