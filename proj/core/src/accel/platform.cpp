#include "nmaw/accel/platform.hpp"

#include <algorithm>
#include <cctype>

#include "nmaw/error.hpp"

namespace nmaw::accel {

std::string_view to_string(KernelKind kernel) noexcept {
  switch (kernel) {
    case KernelKind::SneakySnake: return "SneakySnake";
    case KernelKind::Vadvc: return "vadvc";
    case KernelKind::Hdiff: return "hdiff";
  }
  return "?";
}

std::string_view to_string(MemoryKind memory) noexcept {
  return memory == MemoryKind::HBM ? "HBM" : "DDR4";
}

KernelKind parse_kernel(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "sneakysnake") return KernelKind::SneakySnake;
  if (lower == "vadvc") return KernelKind::Vadvc;
  if (lower == "hdiff") return KernelKind::Hdiff;
  throw Error(ErrorKind::InvalidArgument, "unknown kernel '" + std::string(name) + "'");
}

void PlatformConfig::validate() const {
  const auto positive = [this](double v, const char* what) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::InvalidArgument, name + ": " + what + " must be positive");
    }
  };
  positive(host_link.bitwidth, "host link bitwidth");
  positive(host_link.read_gbps, "host read bandwidth");
  positive(host_link.write_gbps, "host write bandwidth");
  positive(memory.usable_channels, "usable channels");
  positive(memory.channel_bitwidth, "channel bitwidth");
  positive(memory.channel_gbps, "channel bandwidth");
  positive(clock_mhz, "clock");
  positive(channels_per_pe, "channels per PE");
  if (power.static_w < 0.0 || power.per_channel_w < 0.0 || power.per_pe_w < 0.0) {
    throw Error(ErrorKind::InvalidArgument, name + ": power terms must be non-negative");
  }
  for (const auto& [kernel, cap] : pe_cap) {
    if (cap < 1) {
      throw Error(ErrorKind::InvalidArgument,
                  name + ": PE cap for " + std::string(to_string(kernel)) + " must be >= 1");
    }
  }
}

int PlatformConfig::cap_for(KernelKind kernel) const {
  const auto it = pe_cap.find(kernel);
  if (it == pe_cap.end()) {
    throw Error(ErrorKind::InvalidArgument,
                name + " has no PE cap for " + std::string(to_string(kernel)));
  }
  return it->second;
}

std::map<std::string, PlatformConfig> platform_presets() {
  const HostLink ocapi{"OCAPI", 1024, 22.1, 22.0};
  const HostLink capi2{"CAPI2", 512, 13.9, 14.0};
  // One HBM2 stack: 16 pseudo channels of 256 bits at 12.8 GB/s each.
  const MemorySystem hbm{MemoryKind::HBM, 16, 256, 12.8, "0.8-2.1 GT/s"};
  // One 512-bit DDR4 channel shared by every PE.
  const MemorySystem ddr4{MemoryKind::DDR4, 1, 512, 25.6, "2.1-4.3 GT/s"};
  const PowerModel channel_step{0.0, 1.0, 0.0};

  const std::map<KernelKind, int> hbm_caps{
      {KernelKind::SneakySnake, 12}, {KernelKind::Vadvc, 14}, {KernelKind::Hdiff, 16}};
  const std::map<KernelKind, int> ddr4_caps{
      {KernelKind::SneakySnake, 4}, {KernelKind::Vadvc, 4}, {KernelKind::Hdiff, 8}};
  const std::map<KernelKind, int> multi_caps{
      {KernelKind::SneakySnake, 3}, {KernelKind::Vadvc, 3}, {KernelKind::Hdiff, 3}};

  std::map<std::string, PlatformConfig> presets;
  presets["HBM+OCAPI"] = {"HBM+OCAPI", ocapi, hbm, 250.0, channel_step, hbm_caps, 1};
  presets["HBM+CAPI2"] = {"HBM+CAPI2", capi2, hbm, 200.0, channel_step, hbm_caps, 1};
  presets["DDR4+CAPI2"] = {"DDR4+CAPI2", capi2, ddr4, 200.0, channel_step, ddr4_caps, 1};
  // Four pseudo channels per PE match the 1024-bit OCAPI width.
  presets["HBM_multi+OCAPI"] = {"HBM_multi+OCAPI", ocapi, hbm, 250.0, channel_step,
                                multi_caps, 4};
  return presets;
}

}  // namespace nmaw::accel
