#include "nmaw/stencil/hdiff.hpp"

#include <algorithm>
#include <thread>
#include <vector>

namespace nmaw::stencil {

template <typename T>
void check_hdiff_inputs(const Grid3D<T>& in, const Grid3D<T>& coeff) {
  if (in.halo() < kHdiffMinHalo) {
    throw Error(ErrorKind::HaloTooSmall,
                "hdiff needs halo >= 2, got " + std::to_string(in.halo()));
  }
  if (!(coeff.dims() == in.dims()) || coeff.halo() != in.halo()) {
    throw Error(ErrorKind::DimensionMismatch, "coeff grid shape differs from input grid");
  }
}

namespace {

template <typename T>
void add_counts(KernelCounters* counters, std::size_t points) {
  if (!counters || points == 0) return;
  counters->flops += kHdiffFlopsPerPoint * points;
  counters->bytes_read += 2 * sizeof(T) * points;
  counters->bytes_written += sizeof(T) * points;
}

}  // namespace

template <typename T>
Grid3D<T> hdiff_reference(const Grid3D<T>& in, const Grid3D<T>& coeff,
                          KernelCounters* counters) {
  check_hdiff_inputs(in, coeff);
  Grid3D<T> out = in;  // halo carries over

  for (std::size_t k = 0; k < in.dims().depth; ++k) {
    const auto lap = [&](std::size_t i, std::size_t j) {
      return T(4) * in(i, j, k) -
             (in(i - 1, j, k) + in(i + 1, j, k) + in(i, j - 1, k) + in(i, j + 1, k));
    };
    const auto flx = [&](std::size_t i, std::size_t j) {
      T f = lap(i + 1, j) - lap(i, j);
      if (f * (in(i + 1, j, k) - in(i, j, k)) > T(0)) f = T(0);
      return f;
    };
    const auto fly = [&](std::size_t i, std::size_t j) {
      T f = lap(i, j + 1) - lap(i, j);
      if (f * (in(i, j + 1, k) - in(i, j, k)) > T(0)) f = T(0);
      return f;
    };
    for (std::size_t i = in.row_begin(); i < in.row_end(); ++i) {
      for (std::size_t j = in.col_begin(); j < in.col_end(); ++j) {
        out(i, j, k) = in(i, j, k) - coeff(i, j, k) * (flx(i, j) - flx(i - 1, j) +
                                                        fly(i, j) - fly(i, j - 1));
      }
    }
  }
  add_counts<T>(counters, in.interior_points());
  return out;
}

template <typename T>
void hdiff_tile(const Grid3D<T>& in, const Grid3D<T>& coeff, Grid3D<T>& out, const Tile& tile,
                KernelCounters* counters) {
  if (tile.points() == 0) return;
  const std::size_t ni = tile.i1 - tile.i0;
  const std::size_t nj = tile.j1 - tile.j0;

  // lap covers rows i0-1..i1 and cols j0-1..j1; local (a, b) = (i - i0 + 1, j - j0 + 1).
  const std::size_t lap_cols = nj + 2;
  std::vector<T> lap((ni + 2) * lap_cols);
  // flx rows i0-1..i1-1 over cols j0..j1-1; fly rows i0..i1-1 over cols j0-1..j1-1.
  std::vector<T> flx((ni + 1) * nj);
  std::vector<T> fly(ni * (nj + 1));

  for (std::size_t k = tile.k0; k < tile.k1; ++k) {
    const auto plane = in.plane(k);
    const std::size_t stride = in.dims().cols;
    const auto at = [&](std::size_t i, std::size_t j) { return plane[i * stride + j]; };

    for (std::size_t a = 0; a < ni + 2; ++a) {
      const std::size_t i = tile.i0 + a - 1;
      for (std::size_t b = 0; b < nj + 2; ++b) {
        const std::size_t j = tile.j0 + b - 1;
        lap[a * lap_cols + b] = T(4) * at(i, j) -
                                (at(i - 1, j) + at(i + 1, j) + at(i, j - 1) + at(i, j + 1));
      }
    }
    for (std::size_t a = 0; a < ni + 1; ++a) {
      const std::size_t i = tile.i0 + a - 1;
      for (std::size_t b = 0; b < nj; ++b) {
        const std::size_t j = tile.j0 + b;
        T f = lap[(a + 1) * lap_cols + b + 1] - lap[a * lap_cols + b + 1];
        if (f * (at(i + 1, j) - at(i, j)) > T(0)) f = T(0);
        flx[a * nj + b] = f;
      }
    }
    for (std::size_t a = 0; a < ni; ++a) {
      const std::size_t i = tile.i0 + a;
      for (std::size_t b = 0; b < nj + 1; ++b) {
        const std::size_t j = tile.j0 + b - 1;
        T f = lap[(a + 1) * lap_cols + b + 1] - lap[(a + 1) * lap_cols + b];
        if (f * (at(i, j + 1) - at(i, j)) > T(0)) f = T(0);
        fly[a * (nj + 1) + b] = f;
      }
    }
    for (std::size_t a = 0; a < ni; ++a) {
      const std::size_t i = tile.i0 + a;
      for (std::size_t b = 0; b < nj; ++b) {
        const std::size_t j = tile.j0 + b;
        out(i, j, k) = at(i, j) - coeff(i, j, k) * (flx[(a + 1) * nj + b] - flx[a * nj + b] +
                                                     fly[a * (nj + 1) + b + 1] -
                                                     fly[a * (nj + 1) + b]);
      }
    }
  }
  add_counts<T>(counters, tile.points());
}

template <typename T>
Grid3D<T> hdiff_optimized(const Grid3D<T>& in, const Grid3D<T>& coeff, unsigned workers,
                          HdiffBlocking blocking, KernelCounters* counters) {
  check_hdiff_inputs(in, coeff);
  if (workers == 0) throw Error(ErrorKind::InvalidArgument, "workers must be positive");
  if (blocking.tile_rows == 0 || blocking.tile_cols == 0) {
    throw Error(ErrorKind::InvalidArgument, "tile extents must be positive");
  }
  Grid3D<T> out = in;  // halo carries over

  std::vector<Tile> tiles;
  for (std::size_t k = 0; k < in.dims().depth; ++k) {
    for (std::size_t i = in.row_begin(); i < in.row_end(); i += blocking.tile_rows) {
      for (std::size_t j = in.col_begin(); j < in.col_end(); j += blocking.tile_cols) {
        tiles.push_back({i, std::min(i + blocking.tile_rows, in.row_end()), j,
                         std::min(j + blocking.tile_cols, in.col_end()), k, k + 1});
      }
    }
  }

  const std::size_t nthreads = std::min<std::size_t>(workers, tiles.size());
  std::vector<KernelCounters> partial(nthreads);
  const auto work = [&](std::size_t t) {
    // Round-robin keeps every worker spread across depth levels.
    for (std::size_t n = t; n < tiles.size(); n += nthreads) {
      hdiff_tile(in, coeff, out, tiles[n], &partial[t]);
    }
  };
  if (nthreads <= 1) {
    if (nthreads == 1) work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t t = 0; t < nthreads; ++t) threads.emplace_back(work, t);
    for (auto& th : threads) th.join();
  }
  if (counters) {
    for (const auto& c : partial) *counters += c;
  }
  return out;
}

#define NMAW_INSTANTIATE_HDIFF(T)                                                              \
  template void check_hdiff_inputs<T>(const Grid3D<T>&, const Grid3D<T>&);                    \
  template Grid3D<T> hdiff_reference<T>(const Grid3D<T>&, const Grid3D<T>&, KernelCounters*); \
  template Grid3D<T> hdiff_optimized<T>(const Grid3D<T>&, const Grid3D<T>&, unsigned,        \
                                        HdiffBlocking, KernelCounters*);                     \
  template void hdiff_tile<T>(const Grid3D<T>&, const Grid3D<T>&, Grid3D<T>&, const Tile&,   \
                              KernelCounters*);

NMAW_INSTANTIATE_HDIFF(float)
NMAW_INSTANTIATE_HDIFF(double)

#undef NMAW_INSTANTIATE_HDIFF

}  // namespace nmaw::stencil
