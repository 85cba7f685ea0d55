#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "nmaw/accel/model.hpp"
#include "nmaw/accel/platform.hpp"
#include "nmaw/io/key_value.hpp"

namespace nmaw::accel {

// Kernel profiles plus the platform presets with any overrides applied.
struct Calibration {
  std::map<KernelKind, KernelProfile> kernels;
  std::map<std::string, PlatformConfig> platforms;

  // Error{InvalidArgument} if the kernel has no profile.
  const KernelProfile& kernel(KernelKind kind) const;
  // Error{UnknownPlatform}.
  const PlatformConfig& platform(std::string_view name) const;
};

// Recognised keys (anything else is Error{MalformedLine}):
//
//   kernel.<kernel>.work_units
//   kernel.<kernel>.bytes_in_per_unit | bytes_out_per_unit | channel_bytes_per_unit
//   kernel.<kernel>.compute_cycles_per_unit
//   kernel.<kernel>.divisible                 true | false
//   kernel.<kernel>.unit_grid                 I,J,K  (stencils: flops from the
//                                              kernel counter model)
//   kernel.<kernel>.flops_per_unit            explicit alternative to unit_grid
//   platform.<name>.clock_mhz | channels_per_pe
//   platform.<name>.host.read_gbps | host.write_gbps
//   platform.<name>.memory.channel_gbps | memory.usable_channels
//   platform.<name>.power.static_w | power.per_channel_w | power.per_pe_w
//   platform.<name>.cap.<kernel>
//
// Every kernel needs all of its profile keys; platforms start from
// platform_presets(). Unknown platform names raise Error{UnknownPlatform}.
Calibration calibration_from_keys(const io::KeyValueMap& keys);
Calibration load_calibration(const std::filesystem::path& path);

// Flops of one work unit of I x J x K points (stencils only).
double stencil_flops_per_unit(KernelKind kernel, std::size_t rows, std::size_t cols,
                              std::size_t depth);

// $NMAW_CALIBRATION if set, else the shipped calibration.cfg (source tree
// first, then the install location).
std::filesystem::path default_calibration_path();

}  // namespace nmaw::accel
