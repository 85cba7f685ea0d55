#pragma once

#include <cstddef>
#include <vector>

#include "nmaw/counters.hpp"
#include "nmaw/stencil/grid.hpp"
#include "nmaw/stencil/thomas.hpp"

namespace nmaw::stencil {

// |wcon| is capped at this fraction of dtr_inv, which keeps every assembled
// column strictly diagonally dominant: |a| + |c| <= dtr_inv / 4 < |b|.
inline constexpr double kWconCapFraction = 0.5;

struct VadvcFields {
  Grid3D<float> u;        // advected field; columns outside the interior pass through
  Grid3D<float> u_stage;  // stage field
  Grid3D<float> u_pos;    // positive-definite field
  Grid3D<float> wcon;     // contravariant vertical velocity
  double dtr_inv = 1.0;   // inverse time step, 1/s

  const GridDims& dims() const noexcept { return u.dims(); }
};

// Builds fields, clamping wcon into [-cap, cap]. Throws
// Error{DimensionMismatch} or Error{InvalidArgument} (dtr_inv <= 0).
VadvcFields make_vadvc_fields(Grid3D<float> u, Grid3D<float> u_stage, Grid3D<float> u_pos,
                              Grid3D<float> wcon, double dtr_inv);

// Throws if the grids disagree in shape, dtr_inv is not positive, or some wcon
// exceeds the cap.
void check_vadvc_fields(const VadvcFields& fields);

// Default coefficient builder for column (i, j), in double precision:
//   a_k = -0.25 wcon(k)          (dropped at k = 0)
//   c_k = +0.25 wcon(k+1)        (dropped at k = K-1)
//   b_k = dtr_inv - a_k - c_k
//   d_k = dtr_inv u_pos(k) - a_k (u_stage(k-1) - u_stage(k)) - c_k (u_stage(k+1) - u_stage(k))
TridiagonalSystem assemble_column(const VadvcFields& fields, std::size_t i, std::size_t j,
                                  KernelCounters* counters = nullptr);

// Solution of column (i, j) before rounding to the grid element type.
std::vector<double> solve_column(const VadvcFields& fields, std::size_t i, std::size_t j);

// Per-column counters for depth K >= 2: 19K-17 flops (11K-10 assembling,
// 8K-7 solving), 6K-4 field loads and K stores.
KernelCounters vadvc_column_counters(std::size_t depth);

// Solves every interior column in turn. Columns outside the interior copy u.
// A singular column raises Error{SingularPivot} naming (i, j).
Grid3D<float> vadvc_reference(const VadvcFields& fields, KernelCounters* counters = nullptr);

// Same result, interior rows split across `workers` threads with per-thread
// scratch.
Grid3D<float> vadvc_optimized(const VadvcFields& fields, unsigned workers,
                              KernelCounters* counters = nullptr);

}  // namespace nmaw::stencil
