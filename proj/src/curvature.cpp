#include "geoflow/curvature.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "geoflow/errors.hpp"

namespace geoflow {

double term_delta(const AlgebraVector& u, const AlgebraVector& v) {
  const BRep delta = b_sym(u, v);
  return 0.25 * (l2_norm_sq(delta.div_b1) + l2_norm_sq(delta.b2));
}

double term_beta(const AlgebraVector& u, const AlgebraVector& v) {
  const OneForm au = a_operator(u.v1);
  const OneForm av = a_operator(v.v1);
  const FourierScalar div_u = divergence(u.v1);
  const FourierScalar div_v = divergence(v.v1);

  const OneForm theta = d0(contract(au, v.v1)) + multiply(div_v, au) +
                        multiply(u.v2, d0(v.v2)) - d0(contract(av, u.v1)) -
                        multiply(div_u, av) - multiply(v.v2, d0(u.v2));
  const double first = integral(contract(theta, lie_bracket(u.v1, v.v1)));

  const FourierScalar q = dot(u.v1, gradient(v.v2)) - dot(v.v1, gradient(u.v2));
  const VectorField transported = multiply(u.v2, v.v1) - multiply(v.v2, u.v1);
  const double second = integral(product(q, divergence(transported)));

  return -0.125 * first - 0.125 * second;
}

double term_bracket(const AlgebraVector& u, const AlgebraVector& v) {
  const AlgebraVector bracket = commutator(u, v);
  return -0.75 * pairing(bracket, bracket);
}

double term_diag(const AlgebraVector& u, const AlgebraVector& v) {
  const BRep bu = b_diag(u);
  const BRep bv = b_diag(v);
  return -0.25 * (l2_inner(bu.div_b1, bv.div_b1) + l2_inner(bu.b2, bv.b2));
}

double numerator_simplified(const AlgebraVector& u, const AlgebraVector& v) {
  const FourierScalar sig_u = divergence(u.v1);
  const FourierScalar sig_v = divergence(v.v1);
  const double iuu = l2_norm_sq(sig_u);
  const double ivv = l2_norm_sq(sig_v);
  const double iuv = l2_inner(sig_u, sig_v);
  const double juu = l2_norm_sq(u.v2);
  const double jvv = l2_norm_sq(v.v2);
  const double juv = l2_inner(u.v2, v.v2);
  const double mu = u.spec().volume();

  const double i1 = (iuu * ivv - iuv * iuv) / (16.0 * mu);
  const double i2 = -(iuv * juv) / (8.0 * mu) - (juv * juv) / (16.0 * mu) +
                    (iuu * jvv) / (16.0 * mu) + (ivv * juu) / (16.0 * mu) +
                    (juu * jvv) / (16.0 * mu);
  return i1 + i2;
}

double gram_det(const AlgebraVector& u, const AlgebraVector& v) {
  const double puu = pairing(u, u);
  const double pvv = pairing(v, v);
  const double puv = pairing(u, v);
  return puu * pvv - puv * puv;
}

double numerator_closed(const AlgebraVector& u, const AlgebraVector& v) {
  return gram_det(u, v) / u.spec().volume();
}

CurvatureBreakdown sectional_curvature(const AlgebraVector& u, const AlgebraVector& v) {
  const double puu = pairing(u, u);
  const double pvv = pairing(v, v);
  const double puv = pairing(u, v);
  const double gram = puu * pvv - puv * puv;
  if (!(puu > 0.0) || !(pvv > 0.0) || gram < 1e-8 * puu * pvv) {
    throw DegeneratePlaneError("sectional_curvature: 2-plane is degenerate (gram " +
                               std::to_string(gram) + ")");
  }
  CurvatureBreakdown out;
  out.term_delta = term_delta(u, v);
  out.term_beta = term_beta(u, v);
  out.term_bracket = term_bracket(u, v);
  out.term_diag = term_diag(u, v);
  out.numerator_terms = out.term_delta + out.term_beta + out.term_bracket + out.term_diag;
  out.numerator_simplified = numerator_simplified(u, v);
  out.numerator_closed = gram / u.spec().volume();
  out.gram = gram;
  out.sectional = out.numerator_terms / gram;
  return out;
}

BRep nabla_identity(const AlgebraVector& u, const AlgebraVector& v) {
  const AlgebraVector bracket = commutator(u, v);
  const BRep sym = b_sym(u, v);
  return BRep{-0.5 * divergence(bracket.v1) - sym.div_b1, -0.5 * bracket.v2 - sym.b2};
}

AlgebraVector random_algebra_vector(const GridSpec& spec, std::uint64_t seed, int active_modes,
                                    double decay) {
  const FourierScalar sigma = random_band_limited(spec, mix_seed(seed, 0), active_modes, decay,
                                                  /*include_constant=*/false);
  const FourierScalar fn = random_band_limited(spec, mix_seed(seed, 1), active_modes, decay,
                                               /*include_constant=*/true);
  return AlgebraVector(gradient(invert_laplacian(sigma)), fn);
}

namespace {

int resolve_threads(int requested, int samples) {
  int threads = requested;
  if (threads <= 0) {
    if (const char* env = std::getenv("GEOFLOW_THREADS")) {
      char* end = nullptr;
      const long parsed = std::strtol(env, &end, 10);
      if (end != env && parsed >= 1 && parsed <= 64) threads = static_cast<int>(parsed);
    }
  }
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
  }
  return std::max(1, std::min(threads, samples));
}

struct SampleResult {
  CurvatureBreakdown breakdown;
  double spread = 0.0;
  long rejections = 0;
};

TermStats collect(const std::vector<SampleResult>& results, double CurvatureBreakdown::*field) {
  TermStats stats;
  stats.min = std::numeric_limits<double>::infinity();
  stats.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (const auto& r : results) {
    const double x = r.breakdown.*field;
    stats.min = std::min(stats.min, x);
    stats.max = std::max(stats.max, x);
    sum += x;
  }
  stats.mean = sum / static_cast<double>(results.size());
  return stats;
}

}  // namespace

SurveyReport curvature_survey(const SurveyConfig& config) {
  if (config.samples < 1) {
    throw std::invalid_argument("curvature_survey: samples must be >= 1");
  }
  const GridSpec spec = GridSpec::make(config.dimension, config.points_per_axis);
  const long rejection_limit = 100L * config.samples;

  std::vector<SampleResult> results(config.samples);
  std::atomic<long> total_rejections{0};
  std::atomic<int> next_sample{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    try {
      for (;;) {
        const int i = next_sample.fetch_add(1);
        if (i >= config.samples) return;
        const std::uint64_t sample_seed = mix_seed(config.seed, static_cast<std::uint64_t>(i));
        SampleResult& slot = results[i];
        for (long attempt = 0;; ++attempt) {
          const AlgebraVector u = random_algebra_vector(
              spec, mix_seed(sample_seed, 2 * attempt), config.active_modes, config.decay);
          const AlgebraVector v = random_algebra_vector(
              spec, mix_seed(sample_seed, 2 * attempt + 1), config.active_modes, config.decay);
          const double puu = pairing(u, u);
          const double pvv = pairing(v, v);
          const double puv = pairing(u, v);
          if (puu > 0.0 && pvv > 0.0 && puu * pvv - puv * puv >= 1e-8 * puu * pvv) {
            slot.breakdown = sectional_curvature(u, v);
            const double ref = 1.0 + std::abs(slot.breakdown.numerator_closed);
            slot.spread =
                std::max(std::abs(slot.breakdown.numerator_terms - slot.breakdown.numerator_closed),
                         std::abs(slot.breakdown.numerator_simplified -
                                  slot.breakdown.numerator_closed)) /
                ref;
            break;
          }
          slot.rejections += 1;
          if (total_rejections.fetch_add(1) + 1 > rejection_limit) {
            throw DegeneratePlaneError("curvature_survey: rejection budget exhausted");
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };

  const int threads = resolve_threads(config.threads, config.samples);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  SurveyReport report;
  report.config = config;
  report.mu = spec.volume();
  report.expected = 1.0 / spec.volume();
  for (const auto& r : results) {
    report.max_rel_error =
        std::max(report.max_rel_error,
                 std::abs(r.breakdown.sectional - report.expected) / report.expected);
    report.route_spread_max = std::max(report.route_spread_max, r.spread);
    report.rejected += r.rejections;
  }
  report.delta_stats = collect(results, &CurvatureBreakdown::term_delta);
  report.beta_stats = collect(results, &CurvatureBreakdown::term_beta);
  report.bracket_stats = collect(results, &CurvatureBreakdown::term_bracket);
  report.diag_stats = collect(results, &CurvatureBreakdown::term_diag);
  report.sectional_stats = collect(results, &CurvatureBreakdown::sectional);
  return report;
}

}  // namespace geoflow
