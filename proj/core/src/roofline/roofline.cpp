#include "nmaw/roofline/roofline.hpp"

#include <algorithm>
#include <set>

#include "nmaw/error.hpp"

namespace nmaw::roofline {

void RooflinePlatform::validate() const {
  if (!(peak_gflops > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, name + ": peak compute must be positive");
  }
  if (bandwidths.empty()) {
    throw Error(ErrorKind::InvalidArgument, name + ": needs at least one bandwidth roof");
  }
  std::set<std::string> seen;
  for (const auto& roof : bandwidths) {
    if (!(roof.gbps > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, name + ": bandwidth " + roof.label +
                                                  " must be positive");
    }
    if (!seen.insert(roof.label).second) {
      throw Error(ErrorKind::InvalidArgument, name + ": duplicate label " + roof.label);
    }
  }
}

double RooflinePlatform::bandwidth(std::string_view label) const {
  for (const auto& roof : bandwidths) {
    if (roof.label == label) return roof.gbps;
  }
  throw Error(ErrorKind::UnknownBandwidthLabel,
              name + " has no bandwidth '" + std::string(label) + "'");
}

double RooflinePlatform::ridge(std::string_view label) const {
  return peak_gflops / bandwidth(label);
}

double attainable(double ai, const RooflinePlatform& platform, std::string_view label) {
  const double bw = platform.bandwidth(label);
  if (!(ai > 0.0)) throw Error(ErrorKind::InvalidArgument, "arithmetic intensity must be > 0");
  return std::min(platform.peak_gflops, ai * bw);
}

std::string_view to_string(BoundClass bound) noexcept {
  return bound == BoundClass::Memory ? "memory" : "compute";
}

std::vector<Placement> place_kernels(const std::vector<KernelSample>& samples,
                                     const RooflinePlatform& platform, std::string_view label) {
  platform.validate();
  if (samples.empty()) throw Error(ErrorKind::InvalidArgument, "no kernels to place");
  const double ridge = platform.ridge(label);
  std::vector<Placement> rows;
  for (const auto& s : samples) {
    if (s.counters.flops == 0 || s.counters.bytes() == 0) {
      throw Error(ErrorKind::InvalidArgument, s.kernel + ": counters are empty");
    }
    Placement p;
    p.kernel = s.kernel;
    p.ai = s.counters.arithmetic_intensity();
    p.measured_gflops = s.measured_gflops;
    p.attainable_gflops = attainable(p.ai, platform, label);
    p.bound = p.ai < ridge ? BoundClass::Memory : BoundClass::Compute;
    p.bandwidth_label = std::string(label);
    p.calibration_warning =
        s.measured_gflops && *s.measured_gflops > p.attainable_gflops * (1.0 + kCalibrationSlack);
    rows.push_back(std::move(p));
  }
  return rows;
}

io::CsvTable roofline_table(const std::vector<Placement>& rows) {
  io::CsvTable table;
  table.header = {"kernel",           "ai_flops_per_byte", "measured_gflops",
                  "attainable_gflops", "bound_class",       "bandwidth_label"};
  for (const auto& p : rows) {
    io::CsvValue measured = std::monostate{};
    if (p.measured_gflops) measured = *p.measured_gflops;
    table.rows.push_back({p.kernel, p.ai, measured, p.attainable_gflops,
                          std::string(to_string(p.bound)), p.bandwidth_label});
  }
  return table;
}

std::map<std::string, RooflinePlatform> roofline_presets() {
  RooflinePlatform power9{"POWER9", 16 * 3.8 * 8, {{"DRAM", 170.0}}};
  return {{power9.name, power9}};
}

RooflinePlatform roofline_preset(std::string_view name) {
  auto presets = roofline_presets();
  const auto it = presets.find(std::string(name));
  if (it == presets.end()) {
    throw Error(ErrorKind::UnknownPlatform, "unknown roofline preset '" + std::string(name) + "'");
  }
  return it->second;
}

}  // namespace nmaw::roofline
