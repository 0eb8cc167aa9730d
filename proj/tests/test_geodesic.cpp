#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "geoflow/algebra.hpp"
#include "geoflow/errors.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/fourier_scalar.hpp"
#include "geoflow/grid.hpp"

using namespace geoflow;

namespace {

double coef_dist(const FourierScalar& f, const FourierScalar& g) { return max_abs_coef(f - g); }

SimConfig hs_cosine(int points, double dt, double t_end) {
  const GridSpec spec = GridSpec::line(points);
  SimConfig config(cosine_mode(spec, {1}), constant_field(spec, 0.5));
  config.dt = dt;
  config.t_end = t_end;
  return config;
}

}  // namespace

TEST_CASE("velocity reconstruction on worked fields") {
  const GridSpec line = GridSpec::line(64);
  const VectorField u = reconstruct_velocity(cosine_mode(line, {1}));
  CHECK(coef_dist(u[0], sine_mode(line, {1})) <= 1e-15);
  CHECK(max_abs_coef(reconstruct_velocity(FourierScalar::zero(line))[0]) == 0.0);

  const GridSpec sq = GridSpec::square(32);
  const VectorField v =
      reconstruct_velocity(cosine_mode(sq, {1, 0}) + cosine_mode(sq, {0, 1}));
  CHECK(coef_dist(v[0], sine_mode(sq, {1, 0})) <= 1e-15);
  CHECK(coef_dist(v[1], sine_mode(sq, {0, 1})) <= 1e-15);

  CHECK_THROWS_AS(reconstruct_velocity(constant_field(line, 1.0)), NonzeroMeanError);

  // div(reconstructed) gives sigma back.
  const FourierScalar sigma = random_band_limited(line, 5, 20, 2.0, false);
  CHECK(coef_dist(divergence(reconstruct_velocity(sigma)), sigma) <= 1e-13);
}

TEST_CASE("euler right-hand side on worked states") {
  const GridSpec line = GridSpec::line(64);

  const GeodesicState s1(0.0, cosine_mode(line, {1}), FourierScalar::zero(line));
  const StateRate r1 = euler_rhs(s1);
  CHECK(coef_dist(r1.sigma_dot, cosine_mode(line, {2}, -0.75)) <= 1e-15);
  CHECK(max_abs_coef(r1.rho_dot) == 0.0);

  const GeodesicState s2(0.0, FourierScalar::zero(line), constant_field(line, 2.0));
  const StateRate r2 = euler_rhs(s2);
  CHECK(max_abs_coef(r2.sigma_dot) <= 1e-14);
  CHECK(max_abs_coef(r2.rho_dot) == 0.0);

  const GeodesicState s3(0.0, FourierScalar::zero(line), sine_mode(line, {1}));
  const StateRate r3 = euler_rhs(s3);
  CHECK(coef_dist(r3.sigma_dot, cosine_mode(line, {2}, -0.25)) <= 1e-15);
  CHECK(max_abs_coef(r3.rho_dot) == 0.0);

  CHECK(mean(r1.sigma_dot) == 0.0);
  CHECK(mean(r3.sigma_dot) == 0.0);
}

TEST_CASE("euler rhs is the diagonal B of the reconstructed direction") {
  for (int dim = 1; dim <= 2; ++dim) {
    const GridSpec spec = dim == 1 ? GridSpec::line(128) : GridSpec::square(64);
    const int modes = dim == 1 ? 21 : 10;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const FourierScalar sigma =
          random_band_limited(spec, mix_seed(600 + dim, seed), modes, 2.0, false);
      const FourierScalar rho =
          random_band_limited(spec, mix_seed(700 + dim, seed), modes, 2.0, true);
      const GeodesicState state(0.0, sigma, rho);
      const StateRate rate = euler_rhs(state);
      const BRep b = b_diag(AlgebraVector(reconstruct_velocity(sigma), rho));
      CHECK(coef_dist(rate.sigma_dot, b.div_b1) <= 1e-11);
      CHECK(coef_dist(rate.rho_dot, b.b2) <= 1e-11);
    }
  }
}

TEST_CASE("rk4 keeps stationary states and tracks the rate to first order") {
  const GridSpec line = GridSpec::line(64);
  const GeodesicState flat(0.0, FourierScalar::zero(line), constant_field(line, 1.0));
  const GeodesicState stepped = rk4_step(flat, 1e-2);
  CHECK(max_abs_coef(stepped.sigma) <= 1e-14);
  CHECK(coef_dist(stepped.rho, flat.rho) <= 1e-14);
  CHECK(stepped.t == doctest::Approx(1e-2));

  const double dt = 1e-3;
  const GeodesicState s(0.0, cosine_mode(line, {1}), FourierScalar::zero(line));
  const GeodesicState s_dt = rk4_step(s, dt);
  const FourierScalar taylor = s.sigma + dt * cosine_mode(line, {2}, -0.75);
  CHECK(sup_norm(s_dt.sigma - taylor) <= 10.0 * dt * dt);
}

TEST_CASE("rk4 convergence order is four") {
  const double t_end = 0.1;
  std::vector<FourierScalar> finals;
  for (double dt : {4e-3, 2e-3, 1e-3}) {
    const TimeSeries ts = simulate(hs_cosine(64, dt, t_end));
    REQUIRE(ts.status == RunStatus::completed);
    finals.push_back(ts.final_sigma);
  }
  // Successive differences scale like (4h)^4-(2h)^4 over (2h)^4-h^4, i.e. 2^4.
  const double coarse = sup_norm(finals[0] - finals[1]);
  const double fine = sup_norm(finals[1] - finals[2]);
  const double order = std::log2(coarse / fine);
  CHECK(order >= 3.7);
  CHECK(order <= 4.3);
}

TEST_CASE("conservation monitors along a smooth run") {
  SimConfig config = hs_cosine(128, 2e-3, 0.5);
  config.output_every = 10;
  const TimeSeries ts = simulate(config);
  REQUIRE(ts.status == RunStatus::completed);
  CHECK(ts.end_time == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(ts.rows.size() == 26);  // t=0 plus every 10th of 250 steps

  const double e0 = ts.rows.front().energy;
  CHECK(e0 == doctest::Approx(3.0 * kPi / 8.0).epsilon(1e-12));
  const double m0 = ts.rows.front().mass;
  CHECK(m0 == doctest::Approx(kPi).epsilon(1e-12));
  for (const TimeSeriesRow& row : ts.rows) {
    CHECK(std::abs(row.energy - e0) <= 1e-10 * e0);
    CHECK(std::abs(row.mass - m0) <= 1e-12 * std::abs(m0));
    CHECK(std::abs(row.mean_sigma) <= 1e-12);
  }
}

TEST_CASE("mass stays fixed for transported density") {
  const GridSpec spec = GridSpec::line(128);
  SimConfig config(cosine_mode(spec, {1}),
                   constant_field(spec, 1.0) + sine_mode(spec, {1}, 0.5));
  config.dt = 1e-3;
  config.t_end = 0.2;
  config.output_every = 20;
  const TimeSeries ts = simulate(config);
  REQUIRE(ts.status == RunStatus::completed);
  for (const TimeSeriesRow& row : ts.rows) {
    CHECK(std::abs(row.mass - kTwoPi) <= 1e-12 * kTwoPi);
  }
}

TEST_CASE("stationary preset never moves") {
  const GridSpec spec = GridSpec::line(64);
  SimConfig config(FourierScalar::zero(spec), constant_field(spec, 1.0));
  config.dt = 1e-2;
  config.t_end = 0.1;
  const TimeSeries ts = simulate(config);
  REQUIRE(ts.status == RunStatus::completed);
  for (const TimeSeriesRow& row : ts.rows) {
    CHECK(std::abs(row.energy - ts.rows.front().energy) <= 1e-14);
    CHECK(row.max_abs_sigma <= 1e-13);
    CHECK(row.max_abs_rho == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("blow-up ends the run with a report, not a crash") {
  const GridSpec spec = GridSpec::line(64);

  // A step size far past the stability limit makes the high modes explode.
  SimConfig unstable(cosine_mode(spec, {1}, 50.0), FourierScalar::zero(spec));
  unstable.dt = 2e-2;
  unstable.t_end = 1.0;
  const TimeSeries ta = simulate(unstable);
  CHECK(ta.status == RunStatus::blowup);
  CHECK(ta.blowup_time > 0.0);
  CHECK(ta.blowup_time < 1.0);
  CHECK(ta.end_time < ta.blowup_time);
  CHECK(std::isfinite(ta.rows.back().max_abs_sigma));
  CHECK(ta.rows.back().t == doctest::Approx(ta.end_time));

  // An explicit sup-norm threshold trips on an otherwise stable run.
  SimConfig tight(cosine_mode(spec, {1}, 50.0), FourierScalar::zero(spec));
  tight.dt = 1e-3;
  tight.t_end = 1.0;
  tight.blowup_threshold = 100.0;
  const TimeSeries tb = simulate(tight);
  CHECK(tb.status == RunStatus::blowup);
  CHECK(tb.blowup_time < 0.1);
  CHECK(tb.rows.back().max_abs_sigma <= 100.0);
}

TEST_CASE("config validation") {
  const GridSpec spec = GridSpec::line(64);
  SimConfig config(cosine_mode(spec, {1}), FourierScalar::zero(spec));
  config.dt = 3e-3;
  config.t_end = 0.01;  // not a multiple of dt
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);

  SimConfig bad_dt(cosine_mode(spec, {1}), FourierScalar::zero(spec));
  bad_dt.dt = -1.0;
  CHECK_THROWS_AS(simulate(bad_dt), std::invalid_argument);

  SimConfig bad_mean(constant_field(spec, 1.0), FourierScalar::zero(spec));
  CHECK_THROWS_AS(simulate(bad_mean), std::invalid_argument);

  SimConfig bad_out(cosine_mode(spec, {1}), FourierScalar::zero(spec));
  bad_out.output_every = 0;
  CHECK_THROWS_AS(simulate(bad_out), std::invalid_argument);
}
