#include "specs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "nmaw/error.hpp"
#include "nmaw/io/rng.hpp"

namespace nmaw::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

template <typename T>
T number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + ": '" + std::string(text) + "' is not a number");
  }
  return value;
}

}  // namespace

GenerateSpec parse_generate(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3 && parts.size() != 4) {
    throw Error(ErrorKind::InvalidArgument, "--generate expects n,m,edits[,seed]");
  }
  GenerateSpec spec;
  spec.pairs = number<std::size_t>(parts[0], "--generate n");
  spec.length = number<std::size_t>(parts[1], "--generate m");
  if (spec.pairs == 0 || spec.length == 0) {
    throw Error(ErrorKind::InvalidArgument, "--generate needs n > 0 and m > 0");
  }
  const auto dash = parts[2].find('-');
  if (dash == std::string_view::npos) {
    spec.min_edits = spec.max_edits = number<int>(parts[2], "--generate edits");
  } else {
    spec.min_edits = number<int>(parts[2].substr(0, dash), "--generate edits");
    spec.max_edits = number<int>(parts[2].substr(dash + 1), "--generate edits");
  }
  if (spec.min_edits < 0 || spec.max_edits < spec.min_edits) {
    throw Error(ErrorKind::InvalidArgument, "--generate edits must be k or lo-hi with lo <= hi");
  }
  spec.seed = parts.size() == 4 ? number<std::uint64_t>(parts[3], "--generate seed")
                                : io::seed_from_env(kDefaultSeed);
  return spec;
}

GridSpec parse_grid(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4 && parts.size() != 5) {
    throw Error(ErrorKind::InvalidArgument, "--grid expects I,J,K,halo[,seed]");
  }
  GridSpec spec;
  spec.dims.rows = number<std::size_t>(parts[0], "--grid I");
  spec.dims.cols = number<std::size_t>(parts[1], "--grid J");
  spec.dims.depth = number<std::size_t>(parts[2], "--grid K");
  spec.halo = number<std::size_t>(parts[3], "--grid halo");
  spec.seed = parts.size() == 5 ? number<std::uint64_t>(parts[4], "--grid seed")
                                : io::seed_from_env(kDefaultSeed);
  stencil::check_grid_shape(spec.dims, spec.halo);
  return spec;
}

StencilKind parse_stencil_kind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "hdiff") return StencilKind::Hdiff;
  if (lower == "vadvc") return StencilKind::Vadvc;
  throw Error(ErrorKind::InvalidArgument,
              "stencil kernel must be hdiff or vadvc, got '" + std::string(name) + "'");
}

std::string_view to_string(StencilKind kind) noexcept {
  return kind == StencilKind::Hdiff ? "hdiff" : "vadvc";
}

}  // namespace nmaw::cli
