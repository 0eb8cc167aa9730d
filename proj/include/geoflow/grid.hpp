#pragma once

#include <cstddef>

namespace geoflow {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform collocation grid on the flat torus [0,2pi)^n with n in {1,2} and the
// same number of points M on every axis.  The side length is fixed to 2pi so
// that wavevectors are integer tuples and the volume is (2pi)^n.  M must be a
// power of two, at least 16, so that the 2/3-rule cutoff floor(M/3) is strictly
// below M/3 and products of dealiased fields never wrap back into the retained
// band.
class GridSpec {
 public:
  static GridSpec line(int points_per_axis) { return GridSpec(1, points_per_axis); }
  static GridSpec square(int points_per_axis) { return GridSpec(2, points_per_axis); }
  static GridSpec make(int dimension, int points_per_axis) {
    return GridSpec(dimension, points_per_axis);
  }

  int dimension() const noexcept { return dimension_; }
  int points_per_axis() const noexcept { return points_; }

  // Largest retained wavenumber per axis under the 2/3 rule.
  int dealias_cutoff() const noexcept { return points_ / 3; }

  std::size_t total_points() const noexcept {
    return dimension_ == 1 ? static_cast<std::size_t>(points_)
                           : static_cast<std::size_t>(points_) * points_;
  }

  // mu(M) = (2pi)^n.
  double volume() const noexcept { return dimension_ == 1 ? kTwoPi : kTwoPi * kTwoPi; }

  double spacing() const noexcept { return kTwoPi / points_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  GridSpec(int dimension, int points);

  int dimension_;
  int points_;
};

}  // namespace geoflow
