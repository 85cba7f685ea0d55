#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmaw/accel/platform.hpp"
#include "nmaw/accel/sweep.hpp"
#include "nmaw/stencil/grid.hpp"

namespace nmaw::cli {

// Seed used when neither a flag nor $NMAW_SEED provides one.
inline constexpr std::uint64_t kDefaultSeed = 42;

// --generate n,m,edits[,seed]; edits is a count or "lo-hi".
struct GenerateSpec {
  std::size_t pairs = 0;
  std::size_t length = 0;
  int min_edits = 0;
  int max_edits = 0;
  std::uint64_t seed = kDefaultSeed;
};
GenerateSpec parse_generate(std::string_view text);

// --grid I,J,K,halo[,seed]
struct GridSpec {
  stencil::GridDims dims{64, 64, 16};
  std::size_t halo = 2;
  std::uint64_t seed = kDefaultSeed;
};
GridSpec parse_grid(std::string_view text);

struct FilterSpec {
  std::optional<std::filesystem::path> pairs;
  std::optional<GenerateSpec> generate;
  int threshold = 5;
  unsigned workers = 1;
  std::filesystem::path out = ".";
};

enum class StencilKind { Hdiff, Vadvc };
StencilKind parse_stencil_kind(std::string_view name);
std::string_view to_string(StencilKind kind) noexcept;

struct StencilSpec {
  StencilKind kernel = StencilKind::Hdiff;
  GridSpec grid;
  unsigned workers = 1;
  std::filesystem::path out = ".";
  bool corrupt_optimized = false;  // test hook: must make verification fail
};

struct SimulateSpec {
  accel::KernelKind kernel = accel::KernelKind::Hdiff;
  std::vector<std::string> platforms;  // empty = all presets
  std::optional<accel::PeRange> pes;   // empty = 1..cap per platform
  std::optional<int> channels_per_pe;
  std::filesystem::path calibration;
  std::filesystem::path out = ".";
};

struct RooflineSpec {
  std::string platform = "POWER9";
  std::string bandwidth_label;  // empty = the preset's first roof
  std::vector<accel::KernelKind> kernels;  // empty = all three
  bool measure = false;  // time the kernels and fill measured_gflops
  std::uint64_t seed = kDefaultSeed;
  std::filesystem::path out = ".";
};

struct ReportSpec {
  std::filesystem::path out = "report";
  std::filesystem::path calibration;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
};

}  // namespace nmaw::cli
