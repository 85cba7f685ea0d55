#pragma once

#include <map>
#include <string>
#include <string_view>

namespace nmaw::accel {

enum class KernelKind { SneakySnake, Vadvc, Hdiff };
enum class MemoryKind { HBM, DDR4 };

std::string_view to_string(KernelKind kernel) noexcept;
std::string_view to_string(MemoryKind memory) noexcept;
// Accepts "SneakySnake", "vadvc", "hdiff" (case-insensitive). Throws
// Error{InvalidArgument}.
KernelKind parse_kernel(std::string_view name);

struct HostLink {
  std::string name;
  int bitwidth = 0;         // bits per transfer
  double read_gbps = 0.0;   // host -> FPGA, GB/s
  double write_gbps = 0.0;  // FPGA -> host, GB/s
};

struct MemorySystem {
  MemoryKind kind = MemoryKind::HBM;
  int usable_channels = 0;
  int channel_bitwidth = 0;   // bits
  double channel_gbps = 0.0;  // GB/s per channel
  // Documentation only; the model works from channel_gbps.
  std::string transfer_rate;
};

// Active power: static + enabled_channels * per_channel + pe_count * per_pe.
struct PowerModel {
  double static_w = 0.0;
  double per_channel_w = 0.0;
  double per_pe_w = 0.0;
};

struct PlatformConfig {
  std::string name;
  HostLink host_link;
  MemorySystem memory;
  double clock_mhz = 0.0;
  PowerModel power;
  std::map<KernelKind, int> pe_cap;
  int channels_per_pe = 1;  // default channel grant per PE

  // Throws Error{InvalidArgument} on non-positive rates or widths.
  void validate() const;
  // Error{InvalidArgument} if no cap is recorded for the kernel.
  int cap_for(KernelKind kernel) const;
};

// The four evaluated boards: HBM+OCAPI, HBM+CAPI2, DDR4+CAPI2 and
// HBM_multi+OCAPI. Bandwidths, widths, clocks, channel counts, PE caps and
// the per-channel power step are board facts; static_w and per_pe_w start at
// zero and come from the calibration file.
std::map<std::string, PlatformConfig> platform_presets();

}  // namespace nmaw::accel
