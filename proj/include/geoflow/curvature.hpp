#pragma once

#include <cstdint>

#include "geoflow/algebra.hpp"

namespace geoflow {

// All routes to the unnormalized sectional curvature <<R(u,v)v,u>> of a
// sampled 2-plane, plus the normalization data.  numerator_terms is the
// four-term expansion, numerator_simplified the I1+I2 integral form, and
// numerator_closed the Gram-determinant closed form; agreement of the three
// is the computational content of the constant-curvature theorem.
struct CurvatureBreakdown {
  double term_delta = 0.0;
  double term_beta = 0.0;
  double term_bracket = 0.0;
  double term_diag = 0.0;
  double numerator_terms = 0.0;
  double numerator_simplified = 0.0;
  double numerator_closed = 0.0;
  double gram = 0.0;
  double sectional = 0.0;
};

// <<delta, delta>> with delta = b_sym(u,v):  1/4 int (div delta1)^2 + 1/4 int delta2^2.
double term_delta(const AlgebraVector& u, const AlgebraVector& v);

// -1/8 int <[u1,v1], Theta> - 1/8 int q div(u2 v1 - v2 u1), where
//   Theta = d<Au1,v1> + div(v1) Au1 + u2 dv2 - d<Av1,u1> - div(u1) Av1 - v2 du2
//   q     = <u1, dv2> - <v1, du2>.
// Assembled exactly in this integrated-by-parts shape, so no inverse of A is
// ever applied to a non-exact form.
double term_beta(const AlgebraVector& u, const AlgebraVector& v);

// -(3/4) <<[u,v], [u,v]>>; always <= 0.
double term_bracket(const AlgebraVector& u, const AlgebraVector& v);

// -<<B(u,u), B(v,v)>> at divergence level.
double term_diag(const AlgebraVector& u, const AlgebraVector& v);

// I1 + I2 evaluated from the six scalar integrals of sigma_u = div u1,
// sigma_v = div v1, u2, v2.
double numerator_simplified(const AlgebraVector& u, const AlgebraVector& v);

// gram / mu(M).
double numerator_closed(const AlgebraVector& u, const AlgebraVector& v);

// <<u,u>><<v,v>> - <<u,v>>^2 >= 0.
double gram_det(const AlgebraVector& u, const AlgebraVector& v);

// Full breakdown with sectional = numerator_terms / gram.  Throws
// DegeneratePlaneError when gram < 1e-8 * <<u,u>><<v,v>> (or either direction
// is metrically null): below that the quotient amplifies roundoff beyond the
// verification tolerance.
CurvatureBreakdown sectional_curvature(const AlgebraVector& u, const AlgebraVector& v);

// Divergence-level data of the covariant derivative at the identity coset:
// -1/2 [u,v] - b_sym(u,v), i.e. div-part = -1/2 div[u1,v1] - div_b1 and
// function-part = -1/2 [u,v]_2 - b2.
BRep nabla_identity(const AlgebraVector& u, const AlgebraVector& v);

// Random tangent direction for surveys: sigma = div u1 is drawn band-limited
// with zero mean (stream 0 of the seed), u1 is its gradient (horizontal)
// representative, and u2 is drawn with a constant mode allowed (stream 1).
AlgebraVector random_algebra_vector(const GridSpec& spec, std::uint64_t seed, int active_modes,
                                    double decay);

struct SurveyConfig {
  int dimension = 1;
  int points_per_axis = 128;
  int active_modes = 21;
  int samples = 200;
  std::uint64_t seed = 42;
  double decay = 2.0;
  // 0 = use GEOFLOW_THREADS if set, else hardware concurrency (capped at 8).
  int threads = 0;
};

struct TermStats {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

struct SurveyReport {
  SurveyConfig config;
  double mu = 0.0;
  double expected = 0.0;          // 1/mu
  double max_rel_error = 0.0;     // of sectional vs expected
  double route_spread_max = 0.0;  // per-sample spread among the three routes
  long rejected = 0;              // degenerate planes redrawn
  TermStats delta_stats;
  TermStats beta_stats;
  TermStats bracket_stats;
  TermStats diag_stats;
  TermStats sectional_stats;
};

// Draws `samples` seeded pairs (per-sample seeds derived from the master
// seed, so reports are identical for any thread count), rejects degenerate
// planes, and aggregates the breakdowns.  Throws std::invalid_argument for
// samples < 1 and DegeneratePlaneError if rejections exceed 100 * samples.
SurveyReport curvature_survey(const SurveyConfig& config);

}  // namespace geoflow
