#include "nmaw/stencil/grid.hpp"

#include <string>

namespace nmaw::stencil {

void check_grid_shape(const GridDims& dims, std::size_t halo) {
  if (dims.rows == 0 || dims.cols == 0 || dims.depth == 0) {
    throw Error(ErrorKind::InvalidArgument, "grid extents must be positive");
  }
  if (dims.rows <= 2 * halo || dims.cols <= 2 * halo) {
    throw Error(ErrorKind::InvalidArgument,
                "halo " + std::to_string(halo) + " leaves no interior in a " +
                    std::to_string(dims.rows) + "x" + std::to_string(dims.cols) + " plane");
  }
}

}  // namespace nmaw::stencil
