// Acceptance gate for the whole engine: eight end-to-end checks, each printed
// as a single PASS/FAIL line with its measured value and pinned tolerance.
// Exit status is the number of failed checks.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "geoflow/curvature.hpp"
#include "geoflow/fd_oracle.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/verification.hpp"

using namespace geoflow;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

AlgebraVector field_only(FourierScalar component) {
  const GridSpec spec = component.spec();
  return AlgebraVector(VectorField(std::vector<FourierScalar>{std::move(component)}),
                       FourierScalar::zero(spec));
}

double coef_dist(const FourierScalar& f, const FourierScalar& g) { return max_abs_coef(f - g); }

// Upper bound on the survey's worst relative deviation from the pinned
// decimal value of 1/mu (the report measures deviation from the full-precision
// constant; the triangle inequality folds in the rounding of the pin).
double deviation_from_pin(const SurveyReport& r, double pin) {
  return (r.max_rel_error * r.expected + std::abs(r.expected - pin)) / pin;
}

}  // namespace

int main() {
  // --- 1: constant curvature on the 1-torus, 200 sampled planes ---
  SurveyConfig survey1;
  survey1.dimension = 1;
  survey1.points_per_axis = 128;
  survey1.active_modes = 21;
  survey1.samples = 200;
  const auto start1 = std::chrono::steady_clock::now();
  const SurveyReport r1 = curvature_survey(survey1);
  const double sec1 = seconds_since(start1);
  const double dev1 = deviation_from_pin(r1, 0.1591549431);
  report(1, dev1 <= 1e-8 && sec1 <= 10.0,
         "1-torus survey (200 planes, 128 points, 21 modes): max relative deviation from "
         "0.1591549431 = " + num(dev1) + " (tol 1e-8), wall time " + num(sec1) +
         " s (limit 10 s)");

  // --- 2: constant curvature on the 2-torus, 50 sampled planes ---
  SurveyConfig survey2;
  survey2.dimension = 2;
  survey2.points_per_axis = 64;
  survey2.active_modes = 10;
  survey2.samples = 50;
  const auto start2 = std::chrono::steady_clock::now();
  const SurveyReport r2 = curvature_survey(survey2);
  const double sec2 = seconds_since(start2);
  const double dev2 = deviation_from_pin(r2, 0.0253302959);
  report(2, dev2 <= 1e-6 && sec2 <= 60.0,
         "2-torus survey (50 planes, 64 points, 10 modes): max relative deviation from "
         "0.0253302959 = " + num(dev2) + " (tol 1e-6), wall time " + num(sec2) +
         " s (limit 60 s)");

  // --- 3: three independent numerator routes agree per sample ---
  const double spread = std::max(r1.route_spread_max, r2.route_spread_max);
  report(3, spread <= 1e-9,
         "per-sample spread among term-sum, integral, and closed-form numerators = " +
         num(spread) + " (tol 1e-9)");

  // --- 4: worked pair u = sin x d/dx, v = cos x d/dx on the 1-torus ---
  {
    const GridSpec line = GridSpec::line(128);
    const AlgebraVector u = field_only(sine_mode(line, {1}));
    const AlgebraVector v = field_only(cosine_mode(line, {1}));
    const CurvatureBreakdown b = sectional_curvature(u, v);
    double worst = std::abs(term_delta(u, v) - 9.0 * kPi / 64.0);
    worst = std::max(worst, std::abs(term_beta(u, v) - (-kPi / 4.0)));
    worst = std::max(worst, std::abs(term_bracket(u, v)));
    worst = std::max(worst, std::abs(term_diag(u, v) - 9.0 * kPi / 64.0));
    worst = std::max(worst, std::abs(b.numerator_terms - kPi / 32.0));
    worst = std::max(worst, std::abs(b.sectional - 1.0 / kTwoPi));
    const double fd_err =
        std::abs(fd_curvature_numerator(u, v, 4096) - kPi / 32.0);
    report(4, worst <= 1e-10 && fd_err <= 1e-8,
           "worked pair breakdown (9 pi/64, -pi/4, 0, 9 pi/64; numerator pi/32; sectional "
           "1/(2 pi)): max term error = " + num(worst) + " (tol 1e-10), finite-difference "
           "numerator error at 4096 points = " + num(fd_err) + " (tol 1e-8)");
  }

  // --- 5: operator identity battery in both dimensions ---
  {
    IdentityConfig id1;
    id1.dimension = 1;
    const IdentityReport a = run_identity_suite(id1);
    IdentityConfig id2;
    id2.dimension = 2;
    const IdentityReport b = run_identity_suite(id2);
    const double lemma = std::max(a.lemma_residual_max, b.lemma_residual_max);
    const double descent = std::max(a.descent_divfree_max, b.descent_divfree_max);
    const double div_bracket = std::max(a.div_bracket_max, b.div_bracket_max);
    const bool ok = lemma <= 1e-10 && descent <= 1e-10 && div_bracket <= 1e-10 &&
                    b.lieformula_checked && b.lieformula_residual_max <= 1e-9 &&
                    a.descent_violation_checked && a.descent_violation_error <= 1e-9;
    report(5, ok,
           "identities (50 samples per dimension): div-inverse lemma " + num(lemma) +
           " (tol 1e-10), bracket-of-flats formula " + num(b.lieformula_residual_max) +
           " (tol 1e-9), descent on volume-preserving directions " + num(descent) +
           " (tol 1e-10), violating-triple error vs 3 pi/8 = " +
           num(a.descent_violation_error) + " (tol 1e-9), divergence-bracket identity " +
           num(div_bracket) + " (tol 1e-10)");
  }

  // --- 6: conservation and 4th-order convergence of the geodesic solver ---
  {
    const GridSpec line = GridSpec::line(256);
    SimConfig sim(cosine_mode(line, {1}), constant_field(line, 0.5));
    sim.dt = 1e-3;
    sim.t_end = 1.0;
    const TimeSeries ts = simulate(sim);
    const double e0 = ts.rows.front().energy;
    const double m0 = ts.rows.front().mass;
    double energy_drift = 0.0, mass_drift = 0.0, mean_sigma = 0.0;
    for (const TimeSeriesRow& row : ts.rows) {
      energy_drift = std::max(energy_drift, std::abs(row.energy - e0) / e0);
      mass_drift = std::max(mass_drift, std::abs(row.mass - m0) / std::abs(m0));
      mean_sigma = std::max(mean_sigma, std::abs(row.mean_sigma));
    }

    std::vector<FourierScalar> finals;
    for (const double dt : {4e-3, 2e-3, 1e-3}) {
      SimConfig probe(cosine_mode(line, {1}), constant_field(line, 0.5));
      probe.dt = dt;
      probe.t_end = 0.1;
      probe.output_every = 1000000;
      finals.push_back(simulate(probe).final_sigma);
    }
    const double order = std::log2(sup_norm(finals[0] - finals[1]) /
                                   sup_norm(finals[1] - finals[2]));

    const bool ok = ts.status == RunStatus::completed && energy_drift <= 1e-8 &&
                    mass_drift <= 1e-12 && mean_sigma <= 1e-12 && order >= 3.7 &&
                    order <= 4.3;
    report(6, ok,
           "cosine geodesic (256 points, dt 1e-3, horizon 1): relative energy drift " +
           num(energy_drift) + " (tol 1e-8), relative mass drift " + num(mass_drift) +
           " (tol 1e-12), max |mean sigma| " + num(mean_sigma) +
           " (tol 1e-12), time-step order " + num(order) + " (window [3.7, 4.3])");
  }

  // --- 7: sigma-form solver against the literal velocity-form oracle ---
  {
    const CrosscheckReport cc = run_crosscheck_1d(CrosscheckConfig{});
    const bool ok = !cc.blew_up() && cc.sup_diff_sigma <= 1e-6 && cc.sup_diff_rho <= 1e-6;
    report(7, ok,
           "independent-solver cross-check (256 points, horizon 0.1): sup slope difference " +
           num(cc.sup_diff_sigma) + ", sup density difference " + num(cc.sup_diff_rho) +
           " (tol 1e-6)");
  }

  // --- 8: the geodesic right-hand side is the quadratic operator's diagonal ---
  {
    double worst = 0.0;
    for (int dim = 1; dim <= 2; ++dim) {
      const GridSpec spec = dim == 1 ? GridSpec::line(128) : GridSpec::square(64);
      const int modes = dim == 1 ? 21 : 10;
      for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const FourierScalar sigma =
            random_band_limited(spec, mix_seed(600 + dim, seed), modes, 2.0, false);
        const FourierScalar rho =
            random_band_limited(spec, mix_seed(700 + dim, seed), modes, 2.0, true);
        const StateRate rate = euler_rhs(GeodesicState(0.0, sigma, rho));
        const BRep b = b_diag(AlgebraVector(reconstruct_velocity(sigma), rho));
        worst = std::max(worst, coef_dist(rate.sigma_dot, b.div_b1));
        worst = std::max(worst, coef_dist(rate.rho_dot, b.b2));
      }
    }
    report(8, worst <= 1e-11,
           "geodesic right-hand side vs diagonal quadratic operator on 50 random states: "
           "max coefficient difference = " + num(worst) + " (tol 1e-11)");
  }

  if (failures == 0) std::printf("all 8 acceptance criteria passed\n");
  return failures;
}
