#pragma once

#include <ostream>

#include "specs.hpp"

namespace nmaw::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitVerification = 2;

// Each command reports progress on `out`, diagnostics on `err`, and never
// throws for input problems: library errors map to kExitInput.

// Writes decisions.csv and stats.csv; throughput goes to `out` only.
int run_filter(const FilterSpec& spec, std::ostream& out, std::ostream& err);
// Writes stencil.csv (counters, verdict) and timing.csv.
int run_stencil(const StencilSpec& spec, std::ostream& out, std::ostream& err);
// Writes sweep.csv and trends.csv.
int run_simulate(const SimulateSpec& spec, std::ostream& out, std::ostream& err);
// Writes roofline.csv.
int run_roofline(const RooflineSpec& spec, std::ostream& out, std::ostream& err);
// Writes the full bundle plus report.md under spec.out.
int run_report(const ReportSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace nmaw::cli
