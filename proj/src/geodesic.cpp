#include "geoflow/geodesic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "geoflow/errors.hpp"

namespace geoflow {
namespace {

void check_same_spec(const GridSpec& a, const GridSpec& b) {
  if (!(a == b)) throw GridMismatchError("geodesic: sigma and rho live on different grids");
}

// sup-norm that reports non-finite values instead of ignoring them.
bool sup_within(const FourierScalar& f, double threshold) {
  for (double v : f.to_grid()) {
    if (!std::isfinite(v) || std::abs(v) > threshold) return false;
  }
  return true;
}

}  // namespace

GeodesicState::GeodesicState(double time, FourierScalar sigma_field, FourierScalar rho_field)
    : t(time), sigma(std::move(sigma_field)), rho(std::move(rho_field)) {
  check_same_spec(sigma.spec(), rho.spec());
}

VectorField reconstruct_velocity(const FourierScalar& sigma) {
  if (std::abs(mean(sigma)) > 1e-12) {
    throw NonzeroMeanError("reconstruct_velocity: sigma has mean " + std::to_string(mean(sigma)));
  }
  return gradient(invert_laplacian(sigma));
}

StateRate euler_rhs(const GeodesicState& state) {
  const VectorField u = reconstruct_velocity(state.sigma);
  const FourierScalar flux = dot(u, gradient(state.sigma)) +
                             0.5 * product(state.sigma, state.sigma) -
                             0.5 * product(state.rho, state.rho);
  return StateRate{-1.0 * remove_mean(flux), -divergence(multiply(state.rho, u))};
}

GeodesicState rk4_step(const GeodesicState& state, double dt, double blowup_threshold) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk4_step: dt must be positive");

  const StateRate k1 = euler_rhs(state);
  const GeodesicState s2(state.t, state.sigma + 0.5 * dt * k1.sigma_dot,
                         state.rho + 0.5 * dt * k1.rho_dot);
  const StateRate k2 = euler_rhs(s2);
  const GeodesicState s3(state.t, state.sigma + 0.5 * dt * k2.sigma_dot,
                         state.rho + 0.5 * dt * k2.rho_dot);
  const StateRate k3 = euler_rhs(s3);
  const GeodesicState s4(state.t, state.sigma + dt * k3.sigma_dot, state.rho + dt * k3.rho_dot);
  const StateRate k4 = euler_rhs(s4);

  const double w = dt / 6.0;
  FourierScalar sigma = state.sigma + w * (k1.sigma_dot + 2.0 * k2.sigma_dot +
                                           2.0 * k3.sigma_dot + k4.sigma_dot);
  FourierScalar rho = state.rho + w * (k1.rho_dot + 2.0 * k2.rho_dot +
                                       2.0 * k3.rho_dot + k4.rho_dot);
  sigma = remove_mean(sigma);

  if (!sup_within(sigma, blowup_threshold) || !sup_within(rho, blowup_threshold)) {
    throw BlowupError("rk4_step: field left the trusted range at t = " +
                          std::to_string(state.t + dt),
                      state.t + dt);
  }
  return GeodesicState(state.t + dt, std::move(sigma), std::move(rho));
}

double state_energy(const GeodesicState& state) {
  return 0.25 * (l2_norm_sq(state.sigma) + l2_norm_sq(state.rho));
}

double state_mass(const GeodesicState& state) { return integral(state.rho); }

SimConfig::SimConfig(FourierScalar sigma_init, FourierScalar rho_init)
    : sigma0(std::move(sigma_init)), rho0(std::move(rho_init)) {
  check_same_spec(sigma0.spec(), rho0.spec());
}

namespace {

TimeSeriesRow make_row(const GeodesicState& state) {
  TimeSeriesRow row;
  row.t = state.t;
  row.energy = state_energy(state);
  row.mass = state_mass(state);
  row.mean_sigma = mean(state.sigma);
  row.max_abs_sigma = sup_norm(state.sigma);
  row.max_abs_rho = sup_norm(state.rho);
  return row;
}

}  // namespace

TimeSeries simulate(const SimConfig& config) {
  if (!(config.dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
  if (!(config.t_end >= config.dt)) throw std::invalid_argument("simulate: need dt <= t_end");
  if (config.output_every < 1) throw std::invalid_argument("simulate: output_every must be >= 1");
  if (!(config.blowup_threshold > 0.0)) {
    throw std::invalid_argument("simulate: blowup_threshold must be positive");
  }
  if (std::abs(mean(config.sigma0)) > 1e-12) {
    throw std::invalid_argument("simulate: initial sigma must have zero mean");
  }
  const double steps_real = config.t_end / config.dt;
  const long long steps = std::llround(steps_real);
  if (steps < 1 || std::abs(steps_real - static_cast<double>(steps)) > 1e-9) {
    throw std::invalid_argument("simulate: t_end must be an integer multiple of dt");
  }

  GeodesicState state(0.0, remove_mean(config.sigma0), config.rho0);
  TimeSeries out{{}, RunStatus::completed, 0.0, 0.0, state.sigma, state.rho};
  out.rows.push_back(make_row(state));

  for (long long i = 1; i <= steps; ++i) {
    try {
      GeodesicState next = rk4_step(state, config.dt, config.blowup_threshold);
      next.t = static_cast<double>(i) * config.dt;  // avoid additive drift
      state = std::move(next);
    } catch (const BlowupError& e) {
      out.status = RunStatus::blowup;
      out.blowup_time = e.time();
      break;
    }
    if (i % config.output_every == 0) out.rows.push_back(make_row(state));
  }

  if (out.rows.back().t != state.t) out.rows.push_back(make_row(state));
  out.end_time = state.t;
  out.final_sigma = state.sigma;
  out.final_rho = state.rho;
  return out;
}

}  // namespace geoflow
