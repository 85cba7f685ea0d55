#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmaw/counters.hpp"
#include "nmaw/io/csv.hpp"

namespace nmaw::roofline {

struct BandwidthRoof {
  std::string label;  // e.g. "DRAM"
  double gbps = 0.0;
};

struct RooflinePlatform {
  std::string name;
  double peak_gflops = 0.0;
  std::vector<BandwidthRoof> bandwidths;  // first entry is the default roof

  // Error{InvalidArgument} unless peak and every bandwidth are positive and
  // labels are unique.
  void validate() const;
  // Error{UnknownBandwidthLabel}.
  double bandwidth(std::string_view label) const;
  // Intensity where the slanted roof meets the flat one: peak / bandwidth.
  double ridge(std::string_view label) const;
};

// min(peak, ai * bandwidth). Error{InvalidArgument} unless ai > 0;
// Error{UnknownBandwidthLabel}.
double attainable(double ai, const RooflinePlatform& platform, std::string_view label);

enum class BoundClass { Memory, Compute };
std::string_view to_string(BoundClass bound) noexcept;

struct KernelSample {
  std::string kernel;
  KernelCounters counters;
  std::optional<double> measured_gflops;  // absent when not timed
};

struct Placement {
  std::string kernel;
  double ai = 0.0;
  std::optional<double> measured_gflops;
  double attainable_gflops = 0.0;
  BoundClass bound = BoundClass::Memory;
  std::string bandwidth_label;
  // Measured exceeds attainable by more than kCalibrationSlack.
  bool calibration_warning = false;
};

inline constexpr double kCalibrationSlack = 0.05;

// Memory-bound iff ai < ridge. Error{InvalidArgument} on an empty sample list
// or a kernel that moved no bytes or did no work.
std::vector<Placement> place_kernels(const std::vector<KernelSample>& samples,
                                     const RooflinePlatform& platform, std::string_view label);

// Columns: kernel, ai_flops_per_byte, measured_gflops, attainable_gflops,
// bound_class, bandwidth_label. An untimed kernel leaves measured empty.
io::CsvTable roofline_table(const std::vector<Placement>& rows);

// "POWER9": one 16-core socket at 3.8 GHz with two 128-bit FMA pipes per
// core (8 double flops/cycle) = 486.4 GFLOPS; eight DDR4-2666 channels =
// 170 GB/s. Both from public datasheets.
std::map<std::string, RooflinePlatform> roofline_presets();
// Error{UnknownPlatform}.
RooflinePlatform roofline_preset(std::string_view name);

}  // namespace nmaw::roofline
