#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "geoflow/curvature.hpp"
#include "geoflow/errors.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/reports.hpp"
#include "geoflow/run_config.hpp"
#include "geoflow/verification.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitBlowup = 3;

void emit_report(const nlohmann::ordered_json& report, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw geoflow::ConfigError("cannot open output path " + out_path);
  out << report.dump(2) << "\n";
}

struct IdentityArgs {
  int dimension = 1;
  std::uint64_t seed = 42;
  int samples = 50;
  double tolerance = 1e-9;
  std::string out_path;
};

int run_verify_identities(const IdentityArgs& args) {
  geoflow::IdentityConfig config;
  config.dimension = args.dimension;
  config.seed = args.seed;
  config.samples = args.samples;
  config.tolerance = args.tolerance;
  const geoflow::IdentityReport report = geoflow::run_identity_suite(config);
  emit_report(geoflow::identity_report_json(report), args.out_path);
  return report.pass ? kExitPass : kExitVerifyFail;
}

struct CurvatureArgs {
  int dimension = 1;
  int samples = 200;
  std::uint64_t seed = 42;
  int modes = 0;
  int points = 0;
  int threads = 0;
  double tolerance = 1e-8;
  std::string out_path;
};

int run_verify_curvature(const CurvatureArgs& args) {
  geoflow::SurveyConfig config;
  config.dimension = args.dimension;
  config.points_per_axis = args.points > 0 ? args.points : (args.dimension == 1 ? 128 : 64);
  config.active_modes = args.modes > 0 ? args.modes : (args.dimension == 1 ? 21 : 10);
  config.samples = args.samples;
  config.seed = args.seed;
  config.threads = args.threads;
  const geoflow::SurveyReport report = geoflow::curvature_survey(config);
  const nlohmann::ordered_json doc = geoflow::curvature_report_json(report, args.tolerance);
  emit_report(doc, args.out_path);
  return doc["pass"].get<bool>() ? kExitPass : kExitVerifyFail;
}

struct SimulateArgs {
  std::string config_path;
  std::string csv_path;
};

int run_simulate(const SimulateArgs& args) {
  std::ifstream in(args.config_path);
  if (!in) throw geoflow::ConfigError("cannot read config file " + args.config_path);
  std::ostringstream text;
  text << in.rdbuf();
  const geoflow::ParsedRun run = geoflow::parse_run_config(text.str());

  const geoflow::TimeSeries series = geoflow::simulate(run.sim);
  if (!args.csv_path.empty()) {
    std::ofstream csv(args.csv_path);
    if (!csv) throw geoflow::ConfigError("cannot open output path " + args.csv_path);
    geoflow::write_time_series_csv(csv, series);
  }
  std::cout << geoflow::simulation_summary_json(run, series).dump(2) << "\n";
  return series.status == geoflow::RunStatus::completed ? kExitPass : kExitBlowup;
}

struct CrosscheckArgs {
  std::uint64_t seed = 42;
  int resolution = 256;
  double t_end = 0.1;
  double dt = 1e-3;
  int modes = 8;
  double amplitude = 1.0;
  double tolerance = 1e-6;
  std::string out_path;
};

int run_crosscheck(const CrosscheckArgs& args) {
  geoflow::CrosscheckConfig config;
  config.seed = args.seed;
  config.resolution = args.resolution;
  config.t_end = args.t_end;
  config.dt = args.dt;
  config.active_modes = args.modes;
  config.amplitude = args.amplitude;
  config.tolerance = args.tolerance;
  const geoflow::CrosscheckReport report = geoflow::run_crosscheck_1d(config);
  emit_report(geoflow::crosscheck_report_json(report), args.out_path);
  if (report.blew_up()) return kExitBlowup;
  return report.pass ? kExitPass : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"geoflow: spectral verification and simulation of the two-component flow"};
  app.require_subcommand(1);

  IdentityArgs identity;
  CLI::App* verify_identities =
      app.add_subcommand("verify-identities", "Run the operator identity suites");
  verify_identities->add_option("--dim", identity.dimension, "Torus dimension (1 or 2)")
      ->check(CLI::Range(1, 2));
  verify_identities->add_option("--seed", identity.seed, "Base RNG seed");
  verify_identities->add_option("--samples", identity.samples, "Random fields per identity");
  verify_identities->add_option("--tol", identity.tolerance, "Residual tolerance");
  verify_identities->add_option("--out", identity.out_path, "Write the JSON report here");

  CurvatureArgs curvature;
  CLI::App* verify_curvature =
      app.add_subcommand("verify-curvature", "Survey sectional curvature over random 2-planes");
  verify_curvature->add_option("--dim", curvature.dimension, "Torus dimension (1 or 2)")
      ->check(CLI::Range(1, 2));
  verify_curvature->add_option("--samples", curvature.samples, "Number of random 2-planes");
  verify_curvature->add_option("--seed", curvature.seed, "Base RNG seed");
  verify_curvature->add_option("--modes", curvature.modes, "Active modes per axis (0 = default)");
  verify_curvature->add_option("--points", curvature.points, "Grid points per axis (0 = default)");
  verify_curvature->add_option("--threads", curvature.threads, "Worker threads (0 = auto)");
  verify_curvature->add_option("--tol", curvature.tolerance, "Relative deviation tolerance");
  verify_curvature->add_option("--out", curvature.out_path, "Write the JSON report here");

  SimulateArgs simulate_args;
  CLI::App* simulate = app.add_subcommand("simulate", "Integrate the geodesic flow from a config");
  simulate->add_option("config", simulate_args.config_path, "JSON run configuration")->required();
  simulate->add_option("--out", simulate_args.csv_path, "Write the time series CSV here");

  CrosscheckArgs crosscheck;
  CLI::App* crosscheck_1d =
      app.add_subcommand("crosscheck-1d", "Compare the spectral solver with the literal oracle");
  crosscheck_1d->add_option("--seed", crosscheck.seed, "RNG seed for the initial data");
  crosscheck_1d->add_option("--resolution", crosscheck.resolution, "Grid points for both solvers");
  crosscheck_1d->add_option("--t-end", crosscheck.t_end, "Final time");
  crosscheck_1d->add_option("--dt", crosscheck.dt, "Time step");
  crosscheck_1d->add_option("--modes", crosscheck.modes, "Active modes in the initial data");
  crosscheck_1d->add_option("--amplitude", crosscheck.amplitude, "Initial data amplitude");
  crosscheck_1d->add_option("--tol", crosscheck.tolerance, "Sup-norm agreement tolerance");
  crosscheck_1d->add_option("--out", crosscheck.out_path, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitPass : kExitConfig;
  }

  try {
    if (verify_identities->parsed()) return run_verify_identities(identity);
    if (verify_curvature->parsed()) return run_verify_curvature(curvature);
    if (simulate->parsed()) return run_simulate(simulate_args);
    return run_crosscheck(crosscheck);
  } catch (const geoflow::ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitConfig;
  } catch (const geoflow::BlowupError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitBlowup;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitVerifyFail;
  }
}
