#include "workloads.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>

#include "nmaw/genomics/chip_maze.hpp"
#include "nmaw/genomics/snake.hpp"
#include "nmaw/io/generate.hpp"
#include "nmaw/stencil/hdiff.hpp"
#include "nmaw/stencil/thomas.hpp"
#include "nmaw/stencil/vadvc.hpp"

namespace nmaw::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Flips the lowest mantissa bit of the first interior value.
void corrupt(stencil::Grid3D<float>& grid) {
  float& v = grid(grid.row_begin(), grid.col_begin(), 0);
  std::uint32_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  bits ^= 1u;
  std::memcpy(&v, &bits, sizeof bits);
}

double max_abs_diff(const stencil::Grid3D<float>& a, const stencil::Grid3D<float>& b) {
  double worst = 0.0;
  const auto va = a.values();
  const auto vb = b.values();
  for (std::size_t i = 0; i < va.size(); ++i) {
    worst = std::max(worst, std::abs(static_cast<double>(va[i]) - static_cast<double>(vb[i])));
  }
  return worst;
}

double max_column_residual(const stencil::VadvcFields& fields) {
  const auto& u = fields.u;
  double worst = 0.0;
  for (std::size_t i = u.row_begin(); i < u.row_end(); ++i) {
    for (std::size_t j = u.col_begin(); j < u.col_end(); ++j) {
      const auto system = stencil::assemble_column(fields, i, j);
      const auto x = stencil::thomas_solve(system);
      double d_norm = 0.0;
      for (const double d : system.rhs) d_norm = std::max(d_norm, std::abs(d));
      worst = std::max(worst, stencil::residual_inf_norm(system, x) / std::max(1.0, d_norm));
    }
  }
  return worst;
}

}  // namespace

StencilOutcome run_stencil_check(StencilKind kind, const GridSpec& grid, unsigned workers,
                                 bool corrupt_optimized) {
  StencilOutcome outcome;
  if (kind == StencilKind::Hdiff) {
    const auto inputs = io::generate_hdiff_inputs(grid.dims, grid.halo, grid.seed);
    auto start = Clock::now();
    const auto ref = stencil::hdiff_reference(inputs.in, inputs.coeff);
    outcome.reference_seconds = seconds_since(start);
    start = Clock::now();
    auto opt = stencil::hdiff_optimized(inputs.in, inputs.coeff, workers, {}, &outcome.counters);
    outcome.optimized_seconds = seconds_since(start);
    if (corrupt_optimized) corrupt(opt);
    outcome.equivalent = opt == ref;
    outcome.max_abs_diff = max_abs_diff(opt, ref);
  } else {
    const auto fields = io::generate_vadvc_fields(grid.dims, grid.halo, grid.seed);
    auto start = Clock::now();
    const auto ref = stencil::vadvc_reference(fields);
    outcome.reference_seconds = seconds_since(start);
    start = Clock::now();
    auto opt = stencil::vadvc_optimized(fields, workers, &outcome.counters);
    outcome.optimized_seconds = seconds_since(start);
    if (corrupt_optimized) corrupt(opt);
    outcome.max_residual = max_column_residual(fields);
    outcome.equivalent = opt == ref && outcome.max_residual <= kVadvcResidualBound;
    outcome.max_abs_diff = max_abs_diff(opt, ref);
  }
  return outcome;
}

std::vector<roofline::KernelSample> instrument_kernels(
    const std::vector<accel::KernelKind>& kernels, std::uint64_t seed, bool measure) {
  std::vector<roofline::KernelSample> samples;
  for (const auto kernel : kernels) {
    roofline::KernelSample sample{std::string(accel::to_string(kernel)), {}, std::nullopt};
    Clock::time_point start;  // set once the inputs exist
    switch (kernel) {
      case accel::KernelKind::SneakySnake: {
        constexpr int kThreshold = 5;
        const auto batch = io::generate_pairs(2000, 100, {0, 10, 0.6, 0.2, 0.2}, seed);
        start = Clock::now();
        for (const auto& pair : batch.pairs()) {
          const auto maze =
              genomics::build_chip_maze(pair.reference, pair.query, kThreshold, &sample.counters);
          genomics::snake_search(maze, kThreshold, nullptr, &sample.counters);
        }
        break;
      }
      case accel::KernelKind::Hdiff: {
        const auto inputs = io::generate_hdiff_inputs({64, 64, 16}, 2, seed);
        start = Clock::now();
        stencil::hdiff_optimized(inputs.in, inputs.coeff, 1, {}, &sample.counters);
        break;
      }
      case accel::KernelKind::Vadvc: {
        const auto fields = io::generate_vadvc_fields({32, 32, 64}, 2, seed);
        start = Clock::now();
        stencil::vadvc_optimized(fields, 1, &sample.counters);
        break;
      }
    }
    if (measure) {
      const double secs = seconds_since(start);
      if (secs > 0.0) sample.measured_gflops = static_cast<double>(sample.counters.flops) / secs / 1e9;
    }
    samples.push_back(std::move(sample));
  }
  return samples;
}

}  // namespace nmaw::cli
