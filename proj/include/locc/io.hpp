#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "locc/ghz.hpp"
#include "locc/ntop.hpp"
#include "locc/protocol.hpp"
#include "locc/state_set.hpp"

namespace locc::io {

using json = nlohmann::ordered_json;

/// Reads a JSON document from a file path, or from stdin when path is "-".
json load_json(const std::string& path);
json parse_json_text(const std::string& text);

json complex_to_json(cx z);
cx complex_from_json(const json& j, const std::string& what);
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j, const std::string& what);

/// StateSetDocument: {format_version, dims, states: [{name, amplitudes}]}.
/// Amplitudes are [re, im] pairs so that round-trips are bit-exact.
StateSet state_set_from_json(const json& doc);
json state_set_to_json(const StateSet& set);

/// MeasurementDocument: {format_version, party, elements, kraus?}.
LocalMeasurement measurement_from_json(const json& doc, double tol = kDefaultTol);
json measurement_to_json(const LocalMeasurement& meas);

/// GhzParamsDocument: {s, t, x} with complex numbers as [re, im].
GhzFamilyParams ghz_params_from_json(const json& doc);
json ghz_params_to_json(const GhzFamilyParams& params);

// ReportDocument builders (shared header fields, per-party rows, summary).
json report_header(double tol);
json ntop_report_to_json(const NtopReport& rep);
json check_report_to_json(const StateSet& set, const OrthogonalityReport& orth,
                          const CheckSummary* summary, double tol);
json protocol_to_json(const OneWayProtocol& proto);
json simulation_to_json(const SimulationResult& sim);
json second_round_to_json(const SecondRoundReport& rep);
json ghz_verdict_to_json(const GhzVerdict& verdict);

}  // namespace locc::io
