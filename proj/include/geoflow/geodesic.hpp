#pragma once

#include <vector>

#include "geoflow/exterior.hpp"

namespace geoflow {

// Geodesic state in divergence variables: sigma = div(u1) (zero mean) and
// rho.  The velocity u1 itself is reconstructed on demand from sigma via the
// gradient (horizontal) representative.
struct GeodesicState {
  double t = 0.0;
  FourierScalar sigma;
  FourierScalar rho;

  GeodesicState(double time, FourierScalar sigma_field, FourierScalar rho_field);
};

struct StateRate {
  FourierScalar sigma_dot;
  FourierScalar rho_dot;
};

// The unique gradient field u = grad g with div u = sigma, mean(g) = 0.
// Throws NonzeroMeanError if |mean(sigma)| > 1e-12 (no such field exists).
VectorField reconstruct_velocity(const FourierScalar& sigma);

// Right-hand side of the Euler equation in divergence variables:
//   sigma_dot = -(<u, grad sigma> + sigma^2/2 - rho^2/2) + its mean,
//   rho_dot   = -div(rho u),
// with u reconstructed from sigma.  The added constant is the integration
// constant lost by d in the momentum form of the equation; it is the unique
// choice keeping mean(sigma_dot) = 0.  In one dimension this is the
// two-component Hunter-Saxton system.
StateRate euler_rhs(const GeodesicState& state);

// Classical 4-stage Runge-Kutta step; mean(sigma) is re-projected to zero
// afterwards.  Throws BlowupError when the stepped fields exceed
// blowup_threshold in sup-norm or stop being finite.
GeodesicState rk4_step(const GeodesicState& state, double dt, double blowup_threshold = 1e6);

// E = 1/4 int (sigma^2 + rho^2) dmu = <<u,u>>, conserved along geodesics.
double state_energy(const GeodesicState& state);

// int rho dmu, conserved because rho_dot is a divergence.
double state_mass(const GeodesicState& state);

struct SimConfig {
  FourierScalar sigma0;
  FourierScalar rho0;
  double dt = 1e-3;
  double t_end = 1.0;
  int output_every = 1;
  double blowup_threshold = 1e6;

  SimConfig(FourierScalar sigma_init, FourierScalar rho_init);
};

struct TimeSeriesRow {
  double t = 0.0;
  double energy = 0.0;
  double mass = 0.0;
  double mean_sigma = 0.0;
  double max_abs_sigma = 0.0;
  double max_abs_rho = 0.0;
};

enum class RunStatus { completed, blowup };

struct TimeSeries {
  std::vector<TimeSeriesRow> rows;
  RunStatus status = RunStatus::completed;
  double end_time = 0.0;     // last time reached with a valid state
  double blowup_time = 0.0;  // time of the rejected step (blowup only)
  FourierScalar final_sigma;
  FourierScalar final_rho;
};

// Fixed-step integration with monitors every output_every steps (plus the
// initial and final rows).  t_end must be an integer multiple of dt.  Blow-up
// ends the run with status blowup and the last valid row; it is not an
// exception at this level.
TimeSeries simulate(const SimConfig& config);

}  // namespace geoflow
