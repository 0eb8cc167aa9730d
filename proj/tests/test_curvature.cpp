#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "geoflow/curvature.hpp"
#include "geoflow/errors.hpp"
#include "geoflow/fourier_scalar.hpp"
#include "geoflow/grid.hpp"

using namespace geoflow;

namespace {

AlgebraVector field_only(FourierScalar component) {
  const GridSpec spec = component.spec();
  return AlgebraVector(VectorField(std::vector<FourierScalar>{std::move(component)}),
                       FourierScalar::zero(spec));
}

double coef_dist(const FourierScalar& f, const FourierScalar& g) { return max_abs_coef(f - g); }

}  // namespace

TEST_CASE("worked 1-D pair: term breakdown, routes and sectional value") {
  const GridSpec line = GridSpec::line(128);
  const AlgebraVector u = field_only(sine_mode(line, {1}));
  const AlgebraVector v = field_only(cosine_mode(line, {1}));

  CHECK(std::abs(term_delta(u, v) - 9.0 * kPi / 64.0) <= 1e-10);
  CHECK(std::abs(term_beta(u, v) - (-kPi / 4.0)) <= 1e-10);
  CHECK(std::abs(term_bracket(u, v)) <= 1e-12);
  CHECK(std::abs(term_diag(u, v) - 9.0 * kPi / 64.0) <= 1e-10);

  const CurvatureBreakdown b = sectional_curvature(u, v);
  CHECK(std::abs(b.numerator_terms - kPi / 32.0) <= 1e-10);
  CHECK(std::abs(b.numerator_simplified - kPi / 32.0) <= 1e-10);
  CHECK(std::abs(b.numerator_closed - kPi / 32.0) <= 1e-10);
  CHECK(std::abs(b.gram - kPi * kPi / 16.0) <= 1e-10);
  CHECK(std::abs(b.sectional - 1.0 / kTwoPi) <= 1e-10);
}

TEST_CASE("term edge cases on degenerate directions") {
  const GridSpec line = GridSpec::line(64);
  const AlgebraVector ker = field_only(constant_field(line, 1.0));
  const AlgebraVector fn(VectorField::zero(line), constant_field(line, 1.0));
  const AlgebraVector u = field_only(sine_mode(line, {1}));

  CHECK(term_delta(ker, ker) == 0.0);
  CHECK(term_delta(fn, fn) == 0.0);
  CHECK(term_beta(u, u) == 0.0);
  CHECK(term_beta(ker, fn) == 0.0);
  CHECK(term_bracket(u, u) == 0.0);
  CHECK(term_diag(u, fn) == 0.0);
  CHECK(term_diag(ker, u) == 0.0);
}

TEST_CASE("mixed-slot bracket term") {
  const GridSpec line = GridSpec::line(64);
  const AlgebraVector u = field_only(sine_mode(line, {1}));
  const AlgebraVector v(VectorField::zero(line), sine_mode(line, {1}));
  // q = sin x cos x, first slot empty: -(3/16) int q^2 = -3 pi / 64.
  CHECK(std::abs(term_bracket(u, v) - (-3.0 * kPi / 64.0)) <= 1e-12);
}

TEST_CASE("simplified and closed numerators on worked pairs") {
  const GridSpec line = GridSpec::line(128);
  const AlgebraVector u = field_only(sine_mode(line, {1}));
  const AlgebraVector v = field_only(cosine_mode(line, {1}));
  const AlgebraVector fn(VectorField::zero(line), constant_field(line, 1.0));

  CHECK(std::abs(numerator_simplified(u, v) - kPi / 32.0) <= 1e-12);
  CHECK(std::abs(numerator_closed(u, v) - kPi / 32.0) <= 1e-12);
  CHECK(std::abs(numerator_simplified(u, fn) - kPi / 16.0) <= 1e-12);
  CHECK(std::abs(numerator_closed(u, fn) - kPi / 16.0) <= 1e-12);
  CHECK(std::abs(numerator_simplified(u, u)) <= 1e-14);
  CHECK(numerator_closed(u, u) == 0.0);
}

TEST_CASE("random T^2 pair has the theorem's sectional curvature") {
  const GridSpec sq = GridSpec::square(64);
  const AlgebraVector u = random_algebra_vector(sq, mix_seed(3, 0), 10, 2.0);
  const AlgebraVector v = random_algebra_vector(sq, mix_seed(3, 1), 10, 2.0);
  const CurvatureBreakdown b = sectional_curvature(u, v);
  CHECK(std::abs(b.sectional - 1.0 / (4.0 * kPi * kPi)) <= 1e-7);
}

TEST_CASE("degenerate planes are rejected") {
  const GridSpec line = GridSpec::line(64);
  const AlgebraVector u = field_only(sine_mode(line, {1}));
  const AlgebraVector v = 2.0 * u;
  CHECK_THROWS_AS(sectional_curvature(u, v), DegeneratePlaneError);
  const AlgebraVector ker = field_only(constant_field(line, 1.0));
  CHECK_THROWS_AS(sectional_curvature(ker, u), DegeneratePlaneError);
}

TEST_CASE("route agreement, symmetry, positivity on random planes") {
  for (int dim = 1; dim <= 2; ++dim) {
    const GridSpec spec = dim == 1 ? GridSpec::line(128) : GridSpec::square(64);
    const int modes = dim == 1 ? 21 : 10;
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const AlgebraVector u =
          random_algebra_vector(spec, mix_seed(1000 + dim, 2 * seed), modes, 2.0);
      const AlgebraVector v =
          random_algebra_vector(spec, mix_seed(1000 + dim, 2 * seed + 1), modes, 2.0);
      const CurvatureBreakdown b = sectional_curvature(u, v);
      const double ref = 1.0 + std::abs(b.numerator_closed);
      CHECK(std::abs(b.numerator_terms - b.numerator_closed) <= 1e-9 * ref);
      CHECK(std::abs(b.numerator_simplified - b.numerator_closed) <= 1e-9 * ref);
      CHECK(b.numerator_terms >= -1e-12);
      CHECK(b.gram >= 0.0);

      // Symmetry of the four-term route under (u,v) swap.
      const double swapped = term_delta(v, u) + term_beta(v, u) + term_bracket(v, u) +
                             term_diag(v, u);
      CHECK(std::abs(swapped - b.numerator_terms) <= 1e-10 * ref);
    }
  }
}

TEST_CASE("sectional curvature is a 2-plane invariant") {
  const GridSpec line = GridSpec::line(128);
  const AlgebraVector u = random_algebra_vector(line, mix_seed(2000, 0), 21, 2.0);
  const AlgebraVector v = random_algebra_vector(line, mix_seed(2000, 1), 21, 2.0);
  const double base = sectional_curvature(u, v).sectional;
  const double changed = sectional_curvature(2.0 * u, -0.5 * v + 0.3 * u).sectional;
  CHECK(std::abs(changed - base) <= 1e-9 * std::abs(base));
}

TEST_CASE("directions in ker A do not move the numerator") {
  const GridSpec line = GridSpec::line(128);
  const AlgebraVector u = random_algebra_vector(line, mix_seed(2100, 0), 21, 2.0);
  const AlgebraVector v = random_algebra_vector(line, mix_seed(2100, 1), 21, 2.0);
  const AlgebraVector shifted = u + field_only(constant_field(line, 0.7));
  CHECK(std::abs(numerator_closed(shifted, v) - numerator_closed(u, v)) <= 1e-10);

  const GridSpec sq = GridSpec::square(64);
  const AlgebraVector a = random_algebra_vector(sq, mix_seed(2200, 0), 10, 2.0);
  const AlgebraVector b = random_algebra_vector(sq, mix_seed(2200, 1), 10, 2.0);
  const FourierScalar stream = random_band_limited(sq, 2300, 10, 2.0, false);
  const AlgebraVector coexact(sharp(delta2(TwoForm(stream))), FourierScalar::zero(sq));
  CHECK(std::abs(numerator_closed(a + coexact, b) - numerator_closed(a, b)) <= 1e-10);
}

TEST_CASE("covariant derivative data at the identity") {
  const GridSpec line = GridSpec::line(64);
  const AlgebraVector u = field_only(sine_mode(line, {1}));
  const AlgebraVector v = field_only(cosine_mode(line, {1}));
  const BRep n = nabla_identity(u, v);
  CHECK(coef_dist(n.div_b1, sine_mode(line, {2}, -0.75)) <= 1e-15);
  CHECK(max_abs_coef(n.b2) == 0.0);

  // nabla(u,u) = -b_diag(u).
  const AlgebraVector w = random_algebra_vector(line, 41, 15, 2.0);
  const BRep nw = nabla_identity(w, w);
  const BRep bw = b_diag(w);
  CHECK(coef_dist(nw.div_b1, -1.0 * bw.div_b1) <= 1e-13);
  CHECK(coef_dist(nw.b2, -1.0 * bw.b2) <= 1e-13);

  // Torsion-free antisymmetrization: nabla(u,v) - nabla(v,u) = -([u,v] data).
  const AlgebraVector x = random_algebra_vector(line, 42, 15, 2.0);
  const BRep nxy = nabla_identity(w, x);
  const BRep nyx = nabla_identity(x, w);
  const AlgebraVector bracket = commutator(w, x);
  CHECK(coef_dist(nxy.div_b1 - nyx.div_b1, -1.0 * divergence(bracket.v1)) <= 1e-13);
  CHECK(coef_dist(nxy.b2 - nyx.b2, -1.0 * bracket.v2) <= 1e-13);
}

TEST_CASE("survey aggregates, determinism and thread independence") {
  SurveyConfig config;
  config.dimension = 1;
  config.points_per_axis = 128;
  config.active_modes = 21;
  config.samples = 20;
  config.seed = 42;
  config.threads = 1;
  const SurveyReport serial = curvature_survey(config);
  CHECK(serial.expected == doctest::Approx(1.0 / kTwoPi).epsilon(1e-15));
  CHECK(serial.max_rel_error <= 1e-8);
  CHECK(serial.route_spread_max <= 1e-9);
  CHECK(serial.delta_stats.min >= 0.0);
  CHECK(serial.bracket_stats.max <= 0.0);
  CHECK(serial.sectional_stats.min <= serial.sectional_stats.mean);
  CHECK(serial.sectional_stats.mean <= serial.sectional_stats.max);

  config.threads = 4;
  const SurveyReport parallel = curvature_survey(config);
  CHECK(parallel.max_rel_error == serial.max_rel_error);
  CHECK(parallel.route_spread_max == serial.route_spread_max);
  CHECK(parallel.sectional_stats.mean == serial.sectional_stats.mean);
  CHECK(parallel.delta_stats.mean == serial.delta_stats.mean);
  CHECK(parallel.beta_stats.min == serial.beta_stats.min);
  CHECK(parallel.rejected == serial.rejected);

  SurveyConfig sq;
  sq.dimension = 2;
  sq.points_per_axis = 64;
  sq.active_modes = 10;
  sq.samples = 6;
  sq.seed = 7;
  const SurveyReport two_d = curvature_survey(sq);
  CHECK(two_d.max_rel_error <= 1e-6);

  SurveyConfig bad = config;
  bad.samples = 0;
  CHECK_THROWS_AS(curvature_survey(bad), std::invalid_argument);
}
