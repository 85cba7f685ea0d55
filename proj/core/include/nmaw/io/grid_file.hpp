#pragma once

#include <filesystem>
#include <istream>
#include <ostream>

#include "nmaw/stencil/grid.hpp"

namespace nmaw::io {

// Binary grid file, all integers little-endian:
//
//   offset  size  field
//   0       6     magic "NMAWG1"
//   6       4     I (rows)         uint32
//   10      4     J (cols)         uint32
//   14      4     K (depth)        uint32
//   18      4     halo             uint32
//   22      4     element width    uint32, 4 (float) or 8 (double)
//   26      ...   I*J*K IEEE-754 values, little-endian, k-major storage order
//
// Reading checks the magic, the element width against T, and the payload
// length: Error{MalformedLine} for a bad header or truncated data,
// Error{DimensionMismatch} for a width mismatch, Error{NonFiniteValue} for
// NaN/inf payload values.
template <typename T>
void write_grid(std::ostream& out, const stencil::Grid3D<T>& grid);
template <typename T>
void write_grid(const stencil::Grid3D<T>& grid, const std::filesystem::path& path);

template <typename T>
stencil::Grid3D<T> read_grid(std::istream& in);
template <typename T>
stencil::Grid3D<T> read_grid(const std::filesystem::path& path);

}  // namespace nmaw::io
