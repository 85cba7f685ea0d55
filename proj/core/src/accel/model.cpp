#include "nmaw/accel/model.hpp"

#include <algorithm>
#include <cmath>

#include "nmaw/error.hpp"

namespace nmaw::accel {

namespace {

// GB/s and bytes -> milliseconds.
double transfer_ms(double bytes, double gbps) { return bytes / (gbps * 1e9) * 1e3; }

}  // namespace

void KernelProfile::validate() const {
  const auto positive = [this](double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(kernel)) + ": " + what + " must be positive");
    }
  };
  positive(bytes_in_per_unit, "bytes_in_per_unit");
  positive(bytes_out_per_unit, "bytes_out_per_unit");
  positive(channel_bytes_per_unit, "channel_bytes_per_unit");
  positive(compute_cycles_per_unit, "compute_cycles_per_unit");
  if (flops_per_unit < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "flops_per_unit must be non-negative");
  }
}

int ChannelMap::enabled_channels() const noexcept {
  if (kind == MemoryKind::DDR4) return pe_count > 0 ? 1 : 0;
  return pe_count * channels_per_pe;
}

ChannelMap assign_channels(const PlatformConfig& platform, int pe_count, int channels_per_pe,
                           std::optional<KernelKind> kernel) {
  if (pe_count < 1) throw Error(ErrorKind::InvalidArgument, "pe_count must be >= 1");
  if (channels_per_pe < 1) throw Error(ErrorKind::InvalidArgument, "channels_per_pe must be >= 1");

  const int usable = platform.memory.usable_channels;
  ChannelMap map{platform.memory.kind, pe_count, channels_per_pe, {}};
  if (platform.memory.kind == MemoryKind::HBM) {
    if (static_cast<long>(pe_count) * channels_per_pe > usable) {
      throw Error(ErrorKind::ChannelsExhausted,
                  std::to_string(pe_count) + " PEs x " + std::to_string(channels_per_pe) +
                      " channels exceeds " + std::to_string(usable) + " on " + platform.name);
    }
  } else if (channels_per_pe > usable) {
    throw Error(ErrorKind::ChannelsExhausted,
                platform.name + " has " + std::to_string(usable) + " shared channel(s)");
  }
  if (kernel && pe_count > platform.cap_for(*kernel)) {
    throw Error(ErrorKind::PeCapExceeded,
                std::to_string(pe_count) + " PEs exceeds the " + platform.name + " cap of " +
                    std::to_string(platform.cap_for(*kernel)) + " for " +
                    std::string(to_string(*kernel)));
  }

  map.channels_of_pe.resize(static_cast<std::size_t>(pe_count));
  for (int pe = 0; pe < pe_count; ++pe) {
    auto& owned = map.channels_of_pe[static_cast<std::size_t>(pe)];
    for (int c = 0; c < channels_per_pe; ++c) {
      owned.push_back(platform.memory.kind == MemoryKind::HBM ? pe * channels_per_pe + c : c);
    }
  }
  return map;
}

StreamConversion convert_stream(std::uint64_t bytes, int from_bits, int to_bits) {
  if (from_bits <= 0 || to_bits <= 0 || from_bits % 8 != 0 || to_bits % 8 != 0) {
    throw Error(ErrorKind::InvalidArgument, "stream widths must be positive whole bytes");
  }
  const auto from_bytes = static_cast<std::uint64_t>(from_bits / 8);
  const auto to_bytes = static_cast<std::uint64_t>(to_bits / 8);
  return {from_bits, to_bits, bytes, bytes, (bytes + from_bytes - 1) / from_bytes,
          (bytes + to_bytes - 1) / to_bytes};
}

double StageTimes::max() const noexcept {
  return std::max({host_transfer_ms, hbm_write_ms, pe_pipeline_ms, write_back_ms});
}

double StageTimes::sum() const noexcept {
  return host_transfer_ms + hbm_write_ms + pe_pipeline_ms + write_back_ms;
}

std::string_view to_string(PeLimiter limiter) noexcept {
  switch (limiter) {
    case PeLimiter::ChannelRead: return "channel-read";
    case PeLimiter::Compute: return "compute";
    case PeLimiter::ChannelWrite: return "channel-write";
  }
  return "?";
}

double power(const PlatformConfig& platform, int pe_count, int channels_per_pe,
             std::optional<KernelKind> kernel) {
  const ChannelMap map = assign_channels(platform, pe_count, channels_per_pe, kernel);
  return platform.power.static_w + map.enabled_channels() * platform.power.per_channel_w +
         pe_count * platform.power.per_pe_w;
}

double efficiency(const SimResult& result, const KernelProfile& profile) {
  if (!(result.power_w > 0.0)) return 0.0;
  if (profile.kernel == KernelKind::SneakySnake) {
    return result.throughput / 1e6 / result.power_w;
  }
  return result.throughput * profile.flops_per_unit / 1e9 / result.power_w;
}

SimResult simulate(const KernelProfile& profile, const PlatformConfig& platform, int pe_count,
                   int channels_per_pe) {
  platform.validate();
  profile.validate();
  const ChannelMap map = assign_channels(platform, pe_count, channels_per_pe, profile.kernel);

  SimResult r;
  r.kernel = profile.kernel;
  r.platform = platform.name;
  r.pe_count = pe_count;
  r.channels_per_pe = channels_per_pe;
  r.enabled_channels = map.enabled_channels();
  r.power_w = power(platform, pe_count, channels_per_pe, profile.kernel);

  const double units = static_cast<double>(profile.work_units);
  const double bytes_in = units * profile.bytes_in_per_unit;
  const double bytes_out = units * profile.bytes_out_per_unit;
  const auto host_bits = platform.host_link.bitwidth;
  const auto channel_bits = platform.memory.channel_bitwidth;
  r.fetch_conversion =
      convert_stream(static_cast<std::uint64_t>(std::llround(bytes_in)), host_bits, channel_bits);
  r.return_conversion =
      convert_stream(static_cast<std::uint64_t>(std::llround(bytes_out)), channel_bits, host_bits);
  if (profile.work_units == 0) return r;

  const bool shared = platform.memory.kind == MemoryKind::DDR4;
  const double channel_gbps = platform.memory.channel_gbps;
  // Bandwidth one PE sees on its channel(s), each direction.
  const double pe_gbps = shared ? channel_gbps / pe_count : channels_per_pe * channel_gbps;

  const double read_rate = pe_gbps * 1e9 / profile.channel_bytes_per_unit;
  const double compute_rate = platform.clock_mhz * 1e6 / profile.compute_cycles_per_unit;
  const double write_rate = pe_gbps * 1e9 / profile.bytes_out_per_unit;
  double pe_rate = compute_rate;  // units per second per PE
  r.limiter = PeLimiter::Compute;
  if (read_rate < pe_rate) {
    pe_rate = read_rate;
    r.limiter = PeLimiter::ChannelRead;
  }
  if (write_rate < pe_rate) {
    pe_rate = write_rate;
    r.limiter = PeLimiter::ChannelWrite;
  }

  const double units_per_pe = profile.divisible
                                  ? units / pe_count
                                  : std::ceil(units / static_cast<double>(pe_count));
  const double write_gbps = shared ? channel_gbps : r.enabled_channels * channel_gbps;

  r.stages.host_transfer_ms = transfer_ms(bytes_in, platform.host_link.read_gbps);
  r.stages.hbm_write_ms = transfer_ms(bytes_in, write_gbps);
  r.stages.pe_pipeline_ms = units_per_pe / pe_rate * 1e3;
  r.stages.write_back_ms = transfer_ms(bytes_out, platform.host_link.write_gbps);

  // First unit's trip through fetch, channel write, PE and write-back. A
  // shared channel is time-multiplexed: it serves one unit at a time at full
  // speed, so contention lowers throughput but not a unit's latency. Capped
  // so a workload too small to overlap never costs more than running the
  // stages back to back.
  const double alone_gbps = shared ? channel_gbps : channels_per_pe * channel_gbps;
  const double alone_rate =
      std::min({alone_gbps * 1e9 / profile.channel_bytes_per_unit, compute_rate,
                alone_gbps * 1e9 / profile.bytes_out_per_unit});
  r.unit_latency_ms = transfer_ms(profile.bytes_in_per_unit, platform.host_link.read_gbps) +
                      transfer_ms(profile.bytes_in_per_unit, alone_gbps) + 1e3 / alone_rate +
                      transfer_ms(profile.bytes_out_per_unit, platform.host_link.write_gbps);
  r.fill_overhead_ms = std::min(r.unit_latency_ms, r.stages.sum() - r.stages.max());

  r.total_ms = r.stages.max() + r.fill_overhead_ms;
  r.throughput = units / (r.total_ms / 1e3);
  r.efficiency = efficiency(r, profile);
  return r;
}

}  // namespace nmaw::accel
