#pragma once

#include <cstddef>

#include "nmaw/counters.hpp"
#include "nmaw/stencil/grid.hpp"

namespace nmaw::stencil {

// Horizontal diffusion: a 5-point Laplacian feeding limited fluxes.
//
//   lap(i,j) = 4 in(i,j) - (in(i-1,j) + in(i+1,j) + in(i,j-1) + in(i,j+1))
//   flx(i,j) = lap(i+1,j) - lap(i,j), zeroed if flx * (in(i+1,j) - in(i,j)) > 0
//   fly(i,j) = lap(i,j+1) - lap(i,j), zeroed if fly * (in(i,j+1) - in(i,j)) > 0
//   out(i,j) = in(i,j) - coeff(i,j) * (flx(i,j) - flx(i-1,j) + fly(i,j) - fly(i,j-1))
//
// applied per depth level on the interior; the halo is copied from `in`.
// Needs halo >= 2.
inline constexpr std::size_t kHdiffMinHalo = 2;

// Counter model, per interior output point: one Laplacian (5 flops), two
// limited fluxes (4 each: difference, gradient, product, select) and the
// update (5); reads in and coeff once, writes out once.
inline constexpr std::uint64_t kHdiffFlopsPerPoint = 18;

// Interior sub-box [i0,i1) x [j0,j1) x [k0,k1).
struct Tile {
  std::size_t i0 = 0, i1 = 0;
  std::size_t j0 = 0, j1 = 0;
  std::size_t k0 = 0, k1 = 0;

  std::size_t points() const noexcept {
    return (i1 > i0 && j1 > j0 && k1 > k0) ? (i1 - i0) * (j1 - j0) * (k1 - k0) : 0;
  }
};

struct HdiffBlocking {
  std::size_t tile_rows = 64;
  std::size_t tile_cols = 64;
};

// Throws Error{HaloTooSmall} or Error{DimensionMismatch}.
template <typename T>
void check_hdiff_inputs(const Grid3D<T>& in, const Grid3D<T>& coeff);

// Straight triple loop recomputing every intermediate at each point.
template <typename T>
Grid3D<T> hdiff_reference(const Grid3D<T>& in, const Grid3D<T>& coeff,
                          KernelCounters* counters = nullptr);

// Tiled over (k, i, j) with Laplacian and flux planes staged per tile; tiles
// are spread over `workers` threads. Bitwise equal to hdiff_reference.
template <typename T>
Grid3D<T> hdiff_optimized(const Grid3D<T>& in, const Grid3D<T>& coeff, unsigned workers,
                          HdiffBlocking blocking = {}, KernelCounters* counters = nullptr);

// Computes one tile of the interior into `out`. Building block of
// hdiff_optimized; an empty tile does nothing.
template <typename T>
void hdiff_tile(const Grid3D<T>& in, const Grid3D<T>& coeff, Grid3D<T>& out, const Tile& tile,
                KernelCounters* counters = nullptr);

}  // namespace nmaw::stencil
