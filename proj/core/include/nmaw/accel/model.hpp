#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmaw/accel/platform.hpp"

namespace nmaw::accel {

// Workload of one accelerator run, split into equal work units that are
// dealt out to the PEs.
struct KernelProfile {
  KernelKind kernel = KernelKind::SneakySnake;
  std::uint64_t work_units = 0;
  double bytes_in_per_unit = 0.0;   // host -> board
  double bytes_out_per_unit = 0.0;  // board -> host, also written by the PE
  // Bytes a PE streams from its memory channel(s) per unit. Exceeds
  // bytes_in_per_unit when the PE re-reads data it cannot keep on chip.
  double channel_bytes_per_unit = 0.0;
  double compute_cycles_per_unit = 0.0;
  bool divisible = true;  // false: a PE always processes whole units
  // Stencils only: floating-point work per unit, from KernelCounters.
  double flops_per_unit = 0.0;

  // Throws Error{InvalidArgument} unless every rate is positive.
  void validate() const;
};

// Which memory channels each PE reads. HBM PEs own disjoint channels; DDR4
// PEs all share channel 0.
struct ChannelMap {
  MemoryKind kind = MemoryKind::HBM;
  int pe_count = 0;
  int channels_per_pe = 0;
  std::vector<std::vector<int>> channels_of_pe;

  int enabled_channels() const noexcept;
};

// Throws Error{InvalidArgument} for pe_count or channels_per_pe < 1,
// Error{ChannelsExhausted} when the PEs need more channels than the platform
// exposes, and Error{PeCapExceeded} when `kernel` is given and pe_count is
// above its cap.
ChannelMap assign_channels(const PlatformConfig& platform, int pe_count, int channels_per_pe,
                           std::optional<KernelKind> kernel = std::nullopt);

// Beat accounting for a stream width converter (e.g. 1024-bit host lines to
// 256-bit channel words). Bytes are conserved; a partial last beat is padded.
struct StreamConversion {
  int from_bits = 0;
  int to_bits = 0;
  std::uint64_t bytes_in = 0;
  std::uint64_t bytes_out = 0;
  std::uint64_t beats_in = 0;
  std::uint64_t beats_out = 0;
};

StreamConversion convert_stream(std::uint64_t bytes, int from_bits, int to_bits);

struct StageTimes {
  double host_transfer_ms = 0.0;  // data-fetch engine over the host link
  double hbm_write_ms = 0.0;      // spreading input over the assigned channels
  double pe_pipeline_ms = 0.0;    // channel read, compute, channel write
  double write_back_ms = 0.0;     // results back to the host

  double max() const noexcept;
  double sum() const noexcept;
};

enum class PeLimiter { ChannelRead, Compute, ChannelWrite };
std::string_view to_string(PeLimiter limiter) noexcept;

struct SimResult {
  KernelKind kernel = KernelKind::SneakySnake;
  std::string platform;
  int pe_count = 0;
  int channels_per_pe = 0;
  int enabled_channels = 0;
  StageTimes stages;
  double unit_latency_ms = 0.0;   // one unit through every stage
  double fill_overhead_ms = 0.0;  // min(unit latency, sum - max of stages)
  double total_ms = 0.0;
  double throughput = 0.0;  // work units per second
  double power_w = 0.0;
  double efficiency = 0.0;  // Mseq/s/W or GFLOPS/W
  PeLimiter limiter = PeLimiter::Compute;
  StreamConversion fetch_conversion;
  StreamConversion return_conversion;
};

// Streamed dataflow model. All stages run concurrently, so
//   total = max(stage times) + fill,
// where fill is one unit's latency through every stage, capped at
// sum - max so total never exceeds fully serial execution. The latency uses
// the uncontended channel speed (a shared channel serves one unit at a time).
// Per-PE rate is
//   min(read_bw / channel_bytes, clock / cycles, write_bw / bytes_out)
// with read_bw = channels_per_pe * channel_bw on HBM and channel_bw / pe_count
// on the shared DDR4 channel.
SimResult simulate(const KernelProfile& profile, const PlatformConfig& platform, int pe_count,
                   int channels_per_pe);

// static_w + enabled_channels * per_channel_w + pe_count * per_pe_w, after
// validating the assignment.
double power(const PlatformConfig& platform, int pe_count, int channels_per_pe,
             std::optional<KernelKind> kernel = std::nullopt);

// SneakySnake: millions of pairs per second per Watt. Stencils: GFLOPS per
// Watt using profile.flops_per_unit. Zero if power is not positive.
double efficiency(const SimResult& result, const KernelProfile& profile);

}  // namespace nmaw::accel
