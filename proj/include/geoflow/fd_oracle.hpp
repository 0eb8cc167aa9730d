// Finite-difference oracle: an independent implementation of the core
// operators on plain grid values, used to cross-validate the spectral stack.
// Nothing here touches a transform; the only bridge between the two stacks is
// fd_sample, which evaluates a spectral field's coefficient sum pointwise.
//
// Stencils are 4th order throughout so that oracle error sits well below the
// comparison tolerances at reachable grid sizes.
#pragma once

#include <vector>

#include "geoflow/algebra.hpp"
#include "geoflow/fourier_scalar.hpp"

namespace geoflow {

// Real values on a uniform periodic grid over [0, 2pi)^d, d = 1 or 2.
// Storage is row-major with axis 0 slowest, matching FourierScalar::to_grid,
// and the grid size is independent of any spectral GridSpec.
class FdField {
 public:
  FdField(int dimension, int points);

  int dimension() const noexcept { return dimension_; }
  int points() const noexcept { return points_; }
  double spacing() const;

  double value(int i) const;
  double value(int i, int j) const;
  double& value(int i);
  double& value(int i, int j);

  const std::vector<double>& values() const noexcept { return values_; }
  std::vector<double>& values() noexcept { return values_; }

  FdField& operator+=(const FdField& other);
  FdField& operator-=(const FdField& other);
  FdField& operator*=(double scale);

 private:
  int dimension_;
  int points_;
  std::vector<double> values_;
};

FdField operator+(FdField a, const FdField& b);
FdField operator-(FdField a, const FdField& b);
FdField operator*(double scale, FdField a);
FdField operator-(FdField a);

// Pointwise product.
FdField fd_product(const FdField& a, const FdField& b);

// Evaluates a spectral field at the nodes of an fd_points grid by summing its
// nonzero Fourier coefficients directly.
FdField fd_sample(const FourierScalar& f, int fd_points);

// 4th-order centred first derivative along the given axis, periodic ends.
FdField fd_derivative(const FdField& f, int axis = 0);

// 4th-order centred second derivative along the given axis.
FdField fd_second_derivative(const FdField& f, int axis = 0);

// Trapezoid rule, which on a periodic uniform grid is the rectangle rule.
double fd_quadrature(const FdField& f);

double fd_mean(const FdField& f);

double fd_sup(const FdField& f);

// Zero-mean periodic antiderivative on the circle (1-D only).  The grid mean
// of the input is dropped first, intervals are accumulated with the 4th-order
// Gregory rule, and the result is recentred to zero mean.
FdField fd_antiderivative(const FdField& f);

// The curvature numerator evaluated entirely with the fd_* operators above on
// samples of the two spectral directions.
double fd_curvature_numerator(const AlgebraVector& u, const AlgebraVector& v,
                              int fd_points);

// Literal 1-D two-component flow in the velocity variable:
//   u_txx = -(u u_xx + 1/2 u_x^2 - 1/2 rho^2)_x,   rho_t = -(rho u)_x,
// with u_t recovered through the zero-mean antiderivative convention.
struct Hs2State {
  double t;
  FdField u;
  FdField rho;

  Hs2State(double time, FdField velocity, FdField density);
};

// One classical RK4 step; throws BlowupError when the new state exceeds the
// sup-norm threshold or stops being finite.
Hs2State hs2_literal_step(const Hs2State& state, double dt,
                          double blowup_threshold = 1e6);

// Fixed-step integration to t_end (which must be an integer multiple of dt).
Hs2State hs2_integrate(Hs2State state, double dt, double t_end,
                       double blowup_threshold = 1e6);

// 1/4 integral of (u_x^2 + rho^2), the conserved energy of the literal flow.
double hs2_energy(const Hs2State& state);

}  // namespace geoflow
