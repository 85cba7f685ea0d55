#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nmaw/accel/calibration.hpp"
#include "nmaw/accel/model.hpp"
#include "nmaw/io/csv.hpp"

namespace nmaw::accel {

struct PeRange {
  int lo = 1;
  int hi = 1;
};

// "lo..hi" or a single count. Error{InvalidArgument} if lo < 1 or hi < lo.
PeRange parse_pe_range(std::string_view text);

// One (platform, pe_count) point. Exactly one of result / error is set.
struct SweepRow {
  KernelKind kernel = KernelKind::SneakySnake;
  std::string platform;
  int pe_count = 0;
  int channels_per_pe = 0;
  std::optional<SimResult> result;
  std::string error;
};

// Every platform x pe_count in order. channels_per_pe defaults to each
// platform's own grant. Invalid points (channel or PE-cap violations) become
// error rows; unknown platforms raise Error{UnknownPlatform}.
std::vector<SweepRow> sweep(const Calibration& calibration, KernelKind kernel,
                            const std::vector<std::string>& platforms, PeRange pes,
                            std::optional<int> channels_per_pe = std::nullopt);

// Columns: kernel, platform, pe_count, channels_per_pe, host_ms, hbmw_ms,
// pipe_ms, wb_ms, total_ms, throughput, power_w, efficiency, error.
io::CsvTable sweep_table(const std::vector<SweepRow>& rows);

}  // namespace nmaw::accel
