#include "geoflow/grid.hpp"

#include <stdexcept>
#include <string>

namespace geoflow {

GridSpec::GridSpec(int dimension, int points) : dimension_(dimension), points_(points) {
  if (dimension != 1 && dimension != 2) {
    throw std::invalid_argument("GridSpec: dimension must be 1 or 2, got " +
                                std::to_string(dimension));
  }
  if (points < 16 || (points & (points - 1)) != 0) {
    throw std::invalid_argument("GridSpec: points per axis must be a power of two >= 16, got " +
                                std::to_string(points));
  }
}

}  // namespace geoflow
