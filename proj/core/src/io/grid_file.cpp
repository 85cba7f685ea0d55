#include "nmaw/io/grid_file.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>

#include "nmaw/error.hpp"

namespace nmaw::io {

namespace {

constexpr std::array<char, 6> kMagic{'N', 'M', 'A', 'W', 'G', '1'};

template <typename U>
void put_le(std::ostream& out, U value) {
  unsigned char bytes[sizeof(U)];
  for (std::size_t b = 0; b < sizeof(U); ++b) {
    bytes[b] = static_cast<unsigned char>(value >> (8 * b));
  }
  out.write(reinterpret_cast<const char*>(bytes), sizeof(U));
}

template <typename U>
U get_le(std::istream& in, const char* what) {
  unsigned char bytes[sizeof(U)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(U))) {
    throw Error(ErrorKind::MalformedLine, std::string("grid file truncated in ") + what);
  }
  U value = 0;
  for (std::size_t b = 0; b < sizeof(U); ++b) value |= static_cast<U>(bytes[b]) << (8 * b);
  return value;
}

template <typename T>
using Bits = std::conditional_t<sizeof(T) == 4, std::uint32_t, std::uint64_t>;

std::uint32_t narrow(std::size_t v, const char* what) {
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " does not fit in 32 bits");
  }
  return static_cast<std::uint32_t>(v);
}

}  // namespace

template <typename T>
void write_grid(std::ostream& out, const stencil::Grid3D<T>& grid) {
  static_assert(sizeof(T) == 4 || sizeof(T) == 8);
  out.write(kMagic.data(), kMagic.size());
  put_le(out, narrow(grid.dims().rows, "I"));
  put_le(out, narrow(grid.dims().cols, "J"));
  put_le(out, narrow(grid.dims().depth, "K"));
  put_le(out, narrow(grid.halo(), "halo"));
  put_le(out, static_cast<std::uint32_t>(sizeof(T)));
  for (const T v : grid.values()) put_le(out, std::bit_cast<Bits<T>>(v));
}

template <typename T>
void write_grid(const stencil::Grid3D<T>& grid, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  write_grid(out, grid);
  out.flush();
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

template <typename T>
stencil::Grid3D<T> read_grid(std::istream& in) {
  std::array<char, 6> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw Error(ErrorKind::MalformedLine, "not a grid file (bad magic)");
  }
  stencil::GridDims dims;
  dims.rows = get_le<std::uint32_t>(in, "header");
  dims.cols = get_le<std::uint32_t>(in, "header");
  dims.depth = get_le<std::uint32_t>(in, "header");
  const std::size_t halo = get_le<std::uint32_t>(in, "header");
  const auto width = get_le<std::uint32_t>(in, "header");
  if (width != 4 && width != 8) {
    throw Error(ErrorKind::MalformedLine, "element width " + std::to_string(width));
  }
  if (width != sizeof(T)) {
    throw Error(ErrorKind::DimensionMismatch, "grid holds " + std::to_string(width) +
                                                  "-byte values, expected " +
                                                  std::to_string(sizeof(T)));
  }
  stencil::check_grid_shape(dims, halo);
  std::vector<T> values(dims.points());
  for (auto& v : values) v = std::bit_cast<T>(get_le<Bits<T>>(in, "payload"));
  return stencil::Grid3D<T>(dims, halo, std::move(values));
}

template <typename T>
stencil::Grid3D<T> read_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return read_grid<T>(in);
}

template void write_grid<float>(std::ostream&, const stencil::Grid3D<float>&);
template void write_grid<double>(std::ostream&, const stencil::Grid3D<double>&);
template void write_grid<float>(const stencil::Grid3D<float>&, const std::filesystem::path&);
template void write_grid<double>(const stencil::Grid3D<double>&, const std::filesystem::path&);
template stencil::Grid3D<float> read_grid<float>(std::istream&);
template stencil::Grid3D<double> read_grid<double>(std::istream&);
template stencil::Grid3D<float> read_grid<float>(const std::filesystem::path&);
template stencil::Grid3D<double> read_grid<double>(const std::filesystem::path&);

}  // namespace nmaw::io
