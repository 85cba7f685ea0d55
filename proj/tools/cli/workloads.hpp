#pragma once

#include <cstdint>
#include <vector>

#include "nmaw/accel/platform.hpp"
#include "nmaw/counters.hpp"
#include "nmaw/roofline/roofline.hpp"
#include "specs.hpp"

namespace nmaw::cli {

// Reference vs optimized run of one stencil on a seeded grid.
struct StencilOutcome {
  KernelCounters counters;   // of the optimized run
  bool equivalent = false;   // bitwise, plus the column residual bound for vadvc
  double max_abs_diff = 0.0; // optimized vs reference
  double max_residual = 0.0; // vadvc: max_col |T x - d|_inf / max(1, |d|_inf)
  double reference_seconds = 0.0;
  double optimized_seconds = 0.0;
};

inline constexpr double kVadvcResidualBound = 1e-10;

StencilOutcome run_stencil_check(StencilKind kind, const GridSpec& grid, unsigned workers,
                                 bool corrupt_optimized = false);

// Counters of each kernel on a small seeded input; with `measure`, the run is
// timed and measured_gflops filled in.
std::vector<roofline::KernelSample> instrument_kernels(
    const std::vector<accel::KernelKind>& kernels, std::uint64_t seed, bool measure);

}  // namespace nmaw::cli
