#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "nmaw/error.hpp"

namespace nmaw::stencil {

struct GridDims {
  std::size_t rows = 0;   // I
  std::size_t cols = 0;   // J
  std::size_t depth = 0;  // K

  std::size_t points() const noexcept { return rows * cols * depth; }
  friend bool operator==(const GridDims&, const GridDims&) = default;
};

// Throws Error{InvalidArgument} for zero extents or when the halo leaves no
// interior (I, J must exceed 2*halo).
void check_grid_shape(const GridDims& dims, std::size_t halo);

// Dense (row, column, depth) grid. Storage is k-major: each depth level is a
// contiguous row-major (i, j) plane, so walking a vertical column strides by
// a whole plane.
template <typename T>
class Grid3D {
 public:
  Grid3D(GridDims dims, std::size_t halo, T fill = T{})
      : dims_(dims), halo_(halo) {
    check_grid_shape(dims, halo);
    values_.assign(dims.points(), fill);
  }

  // Takes ownership of `values` in storage order. Throws
  // Error{DimensionMismatch} on a size mismatch and Error{NonFiniteValue} if
  // any value is NaN or infinite.
  Grid3D(GridDims dims, std::size_t halo, std::vector<T> values)
      : dims_(dims), halo_(halo), values_(std::move(values)) {
    check_grid_shape(dims, halo);
    if (values_.size() != dims.points()) {
      throw Error(ErrorKind::DimensionMismatch, "value count does not match grid dims");
    }
    for (const T v : values_) {
      if (!std::isfinite(v)) throw Error(ErrorKind::NonFiniteValue, "grid value is not finite");
    }
  }

  const GridDims& dims() const noexcept { return dims_; }
  std::size_t halo() const noexcept { return halo_; }

  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return (k * dims_.rows + i) * dims_.cols + j;
  }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) noexcept {
    return values_[index(i, j, k)];
  }
  T operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return values_[index(i, j, k)];
  }

  std::span<T> values() noexcept { return values_; }
  std::span<const T> values() const noexcept { return values_; }
  std::span<T> plane(std::size_t k) noexcept {
    return std::span<T>(values_).subspan(k * dims_.rows * dims_.cols, dims_.rows * dims_.cols);
  }
  std::span<const T> plane(std::size_t k) const noexcept {
    return std::span<const T>(values_).subspan(k * dims_.rows * dims_.cols,
                                               dims_.rows * dims_.cols);
  }

  // Interior bounds in i and j: [halo, extent - halo).
  std::size_t row_begin() const noexcept { return halo_; }
  std::size_t row_end() const noexcept { return dims_.rows - halo_; }
  std::size_t col_begin() const noexcept { return halo_; }
  std::size_t col_end() const noexcept { return dims_.cols - halo_; }
  std::size_t interior_points() const noexcept {
    return (row_end() - row_begin()) * (col_end() - col_begin()) * dims_.depth;
  }

  bool all_finite() const noexcept {
    for (const T v : values_) {
      if (!std::isfinite(v)) return false;
    }
    return true;
  }

  friend bool operator==(const Grid3D&, const Grid3D&) = default;

 private:
  GridDims dims_;
  std::size_t halo_;
  std::vector<T> values_;
};

}  // namespace nmaw::stencil
