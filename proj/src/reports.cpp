#include "geoflow/reports.hpp"

#include <cmath>
#include <cstdio>
#include <ctime>
#include <chrono>
#include <ostream>

namespace geoflow {
namespace {

using nlohmann::ordered_json;

ordered_json stats_json(const TermStats& stats) {
  return ordered_json{{"min", stats.min}, {"max", stats.max}, {"mean", stats.mean}};
}

}  // namespace

std::string iso_utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buffer;
}

ordered_json identity_report_json(const IdentityReport& report) {
  ordered_json out;
  out["suite"] = "identities";
  out["dimension"] = report.config.dimension;
  out["points_per_axis"] = report.config.points_per_axis;
  out["active_modes"] = report.config.active_modes;
  out["samples"] = report.config.samples;
  out["seed"] = report.config.seed;
  out["tolerance"] = report.config.tolerance;
  ordered_json residuals;
  residuals["lemma_div_ainv_d"] = report.lemma_residual_max;
  residuals["lieformula"] =
      report.lieformula_checked ? ordered_json(report.lieformula_residual_max) : ordered_json();
  residuals["descent_divfree"] = report.descent_divfree_max;
  residuals["descent_violation_error"] = report.descent_violation_checked
                                             ? ordered_json(report.descent_violation_error)
                                             : ordered_json();
  residuals["div_bracket"] = report.div_bracket_max;
  out["residuals"] = residuals;
  out["pass"] = report.pass;
  out["timestamp"] = iso_utc_timestamp();
  return out;
}

ordered_json curvature_report_json(const SurveyReport& report, double tolerance) {
  ordered_json out;
  out["suite"] = "curvature";
  out["dimension"] = report.config.dimension;
  out["points_per_axis"] = report.config.points_per_axis;
  out["active_modes"] = report.config.active_modes;
  out["samples"] = report.config.samples;
  out["seed"] = report.config.seed;
  out["mu"] = report.mu;
  out["expected_curvature"] = report.expected;
  out["tolerance"] = tolerance;
  out["max_rel_error"] = report.max_rel_error;
  out["route_spread_max"] = report.route_spread_max;
  out["rejected_pairs"] = report.rejected;
  ordered_json terms;
  terms["delta"] = stats_json(report.delta_stats);
  terms["beta"] = stats_json(report.beta_stats);
  terms["bracket"] = stats_json(report.bracket_stats);
  terms["diag"] = stats_json(report.diag_stats);
  terms["sectional"] = stats_json(report.sectional_stats);
  out["term_stats"] = terms;
  out["pass"] = report.max_rel_error <= tolerance && report.route_spread_max <= tolerance;
  out["timestamp"] = iso_utc_timestamp();
  return out;
}

ordered_json simulation_summary_json(const ParsedRun& run, const TimeSeries& series) {
  ordered_json out;
  out["suite"] = "simulate";
  out["dimension"] = run.dimension;
  out["points_per_axis"] = run.points_per_axis;
  out["dt"] = run.sim.dt;
  out["t_end"] = run.sim.t_end;
  out["output_every"] = run.sim.output_every;
  out["seed"] = run.seed ? ordered_json(*run.seed) : ordered_json();
  out["status"] = series.status == RunStatus::completed ? "completed" : "blowup";
  out["end_time"] = series.end_time;
  if (series.status == RunStatus::blowup) out["blowup_time"] = series.blowup_time;
  out["rows"] = series.rows.size();
  const TimeSeriesRow& last = series.rows.back();
  ordered_json final;
  final["t"] = last.t;
  final["energy"] = last.energy;
  final["mass"] = last.mass;
  final["mean_sigma"] = last.mean_sigma;
  final["max_abs_sigma"] = last.max_abs_sigma;
  final["max_abs_rho"] = last.max_abs_rho;
  out["final"] = final;
  const double e0 = series.rows.front().energy;
  const double drift = std::abs(last.energy - e0);
  out["energy_drift"] = e0 > 0.0 ? drift / e0 : drift;
  out["timestamp"] = iso_utc_timestamp();
  return out;
}

ordered_json crosscheck_report_json(const CrosscheckReport& report) {
  ordered_json out;
  out["suite"] = "crosscheck_1d";
  out["seed"] = report.config.seed;
  out["resolution"] = report.config.resolution;
  out["dt"] = report.config.dt;
  out["t_end"] = report.config.t_end;
  out["active_modes"] = report.config.active_modes;
  out["amplitude"] = report.config.amplitude;
  out["tolerance"] = report.config.tolerance;
  out["spectral_status"] = report.spectral_blowup ? "blowup" : "completed";
  out["fd_status"] = report.fd_blowup ? "blowup" : "completed";
  if (report.spectral_blowup) out["spectral_blowup_time"] = report.spectral_blowup_time;
  if (report.fd_blowup) out["fd_blowup_time"] = report.fd_blowup_time;
  if (!report.blew_up()) {
    out["sup_diff_sigma"] = report.sup_diff_sigma;
    out["sup_diff_rho"] = report.sup_diff_rho;
  }
  out["pass"] = report.pass;
  out["timestamp"] = iso_utc_timestamp();
  return out;
}

void write_time_series_csv(std::ostream& out, const TimeSeries& series) {
  out << "t,energy,mass,mean_sigma,max_abs_sigma,max_abs_rho\n";
  char buffer[160];
  for (const TimeSeriesRow& row : series.rows) {
    std::snprintf(buffer, sizeof(buffer), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", row.t,
                  row.energy, row.mass, row.mean_sigma, row.max_abs_sigma, row.max_abs_rho);
    out << buffer;
  }
}

}  // namespace geoflow
