// JSON and CSV emitters for the command-line tool.  Field order is fixed so
// that two runs with the same seed produce byte-identical documents apart
// from the timestamp.
#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "geoflow/curvature.hpp"
#include "geoflow/geodesic.hpp"
#include "geoflow/run_config.hpp"
#include "geoflow/verification.hpp"

namespace geoflow {

std::string iso_utc_timestamp();

nlohmann::ordered_json identity_report_json(const IdentityReport& report);

// Wraps a curvature survey as a verification report; pass requires both the
// curvature deviation and the route spread to clear the tolerance.
nlohmann::ordered_json curvature_report_json(const SurveyReport& report, double tolerance);

nlohmann::ordered_json simulation_summary_json(const ParsedRun& run, const TimeSeries& series);

nlohmann::ordered_json crosscheck_report_json(const CrosscheckReport& report);

// Header "t,energy,mass,mean_sigma,max_abs_sigma,max_abs_rho" followed by one
// row per recorded sample, full double precision.
void write_time_series_csv(std::ostream& out, const TimeSeries& series);

}  // namespace geoflow
