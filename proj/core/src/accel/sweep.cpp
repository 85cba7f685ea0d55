#include "nmaw/accel/sweep.hpp"

#include <charconv>

#include "nmaw/error.hpp"

namespace nmaw::accel {

namespace {

int parse_positive(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw Error(ErrorKind::InvalidArgument,
                "PE range '" + std::string(whole) + "' needs positive integers (lo..hi)");
  }
  return value;
}

}  // namespace

PeRange parse_pe_range(std::string_view text) {
  const auto dots = text.find("..");
  PeRange range;
  if (dots == std::string_view::npos) {
    range.lo = range.hi = parse_positive(text, text);
  } else {
    range.lo = parse_positive(text.substr(0, dots), text);
    range.hi = parse_positive(text.substr(dots + 2), text);
  }
  if (range.hi < range.lo) {
    throw Error(ErrorKind::InvalidArgument, "PE range '" + std::string(text) + "' is empty");
  }
  return range;
}

std::vector<SweepRow> sweep(const Calibration& calibration, KernelKind kernel,
                            const std::vector<std::string>& platforms, PeRange pes,
                            std::optional<int> channels_per_pe) {
  if (pes.lo < 1 || pes.hi < pes.lo) {
    throw Error(ErrorKind::InvalidArgument, "PE range must satisfy 1 <= lo <= hi");
  }
  const KernelProfile& profile = calibration.kernel(kernel);
  std::vector<SweepRow> rows;
  for (const auto& name : platforms) {
    const PlatformConfig& platform = calibration.platform(name);
    const int channels = channels_per_pe.value_or(platform.channels_per_pe);
    for (int n = pes.lo; n <= pes.hi; ++n) {
      SweepRow row{kernel, name, n, channels, std::nullopt, {}};
      try {
        row.result = simulate(profile, platform, n, channels);
      } catch (const Error& e) {
        row.error = e.what();
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

io::CsvTable sweep_table(const std::vector<SweepRow>& rows) {
  io::CsvTable table;
  table.header = {"kernel",  "platform", "pe_count", "channels_per_pe", "host_ms",
                  "hbmw_ms", "pipe_ms",  "wb_ms",    "total_ms",        "throughput",
                  "power_w", "efficiency", "error"};
  for (const auto& row : rows) {
    io::CsvRow out{std::string(to_string(row.kernel)), row.platform,
                   static_cast<std::int64_t>(row.pe_count),
                   static_cast<std::int64_t>(row.channels_per_pe)};
    if (row.result) {
      const auto& r = *row.result;
      out.insert(out.end(), {r.stages.host_transfer_ms, r.stages.hbm_write_ms,
                             r.stages.pe_pipeline_ms, r.stages.write_back_ms, r.total_ms,
                             r.throughput, r.power_w, r.efficiency, std::monostate{}});
    } else {
      out.resize(12);
      out.emplace_back(row.error);
    }
    table.rows.push_back(std::move(out));
  }
  return table;
}

}  // namespace nmaw::accel
