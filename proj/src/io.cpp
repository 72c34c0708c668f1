#include "locc/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "locc/version.hpp"

namespace locc::io {

namespace {

double number_from_json(const json& j, const std::string& what) {
  if (!j.is_number()) throw input_error("expected a number for " + what);
  return j.get<double>();
}

void require_format_version(const json& doc, const std::string& what) {
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
    throw input_error(what + ": missing integer field 'format_version'");
  if (doc["format_version"].get<int>() != kFormatVersion)
    throw input_error(what + ": unsupported format_version " +
                      doc["format_version"].dump());
}

}  // namespace

json load_json(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_json_text(buf.str());
  }
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw input_error(std::string("malformed JSON: ") + e.what());
  }
}

json complex_to_json(cx z) { return json::array({z.real(), z.imag()}); }

cx complex_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2)
    throw input_error(what + ": complex numbers must be [re, im] pairs");
  return cx(number_from_json(j[0], what), number_from_json(j[1], what));
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j, const std::string& what) {
  if (!j.is_array() || j.empty()) throw input_error(what + ": expected a non-empty matrix");
  const int d = static_cast<int>(j.size());
  CMatrix m(d);
  for (int r = 0; r < d; ++r) {
    if (!j[r].is_array() || static_cast<int>(j[r].size()) != d)
      throw input_error(what + ": matrix must be square");
    for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(j[r][c], what);
  }
  return m;
}

StateSet state_set_from_json(const json& doc) {
  if (!doc.is_object()) throw input_error("StateSetDocument: expected a JSON object");
  require_format_version(doc, "StateSetDocument");
  if (!doc.contains("dims") || !doc["dims"].is_array() || doc["dims"].empty())
    throw input_error("StateSetDocument: missing non-empty array field 'dims'");
  std::vector<int> dims;
  for (const auto& d : doc["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw input_error("StateSetDocument: dims must be positive integers");
    dims.push_back(d.get<int>());
  }
  if (!doc.contains("states") || !doc["states"].is_array() || doc["states"].empty())
    throw input_error("StateSetDocument: missing non-empty array field 'states'");
  std::vector<std::vector<cx>> states;
  std::vector<std::string> names;
  int index = 0;
  for (const auto& s : doc["states"]) {
    if (!s.is_object() || !s.contains("amplitudes") || !s["amplitudes"].is_array())
      throw input_error("StateSetDocument: each state needs an 'amplitudes' array");
    std::vector<cx> amps;
    amps.reserve(s["amplitudes"].size());
    for (const auto& a : s["amplitudes"]) amps.push_back(complex_from_json(a, "amplitudes"));
    states.push_back(std::move(amps));
    names.push_back(s.contains("name") && s["name"].is_string()
                        ? s["name"].get<std::string>()
                        : "state" + std::to_string(index));
    ++index;
  }
  return StateSet::make(std::move(dims), std::move(states), std::move(names));
}

json state_set_to_json(const StateSet& set) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["dims"] = set.dims();
  json states = json::array();
  for (int i = 0; i < set.num_states(); ++i) {
    json s;
    s["name"] = set.names()[i];
    json amps = json::array();
    for (const cx& a : set.state(i)) amps.push_back(complex_to_json(a));
    s["amplitudes"] = std::move(amps);
    states.push_back(std::move(s));
  }
  doc["states"] = std::move(states);
  return doc;
}

LocalMeasurement measurement_from_json(const json& doc, double tol) {
  if (!doc.is_object()) throw input_error("MeasurementDocument: expected a JSON object");
  require_format_version(doc, "MeasurementDocument");
  if (!doc.contains("party") || !doc["party"].is_number_integer() || doc["party"].get<int>() < 0)
    throw input_error("MeasurementDocument: missing non-negative integer field 'party'");
  if (!doc.contains("elements") || !doc["elements"].is_array() || doc["elements"].empty())
    throw input_error("MeasurementDocument: missing non-empty array field 'elements'");
  std::vector<HermitianOp> elements;
  for (const auto& e : doc["elements"])
    elements.push_back(HermitianOp::from(matrix_from_json(e, "elements"), 100 * tol));
  std::vector<CMatrix> kraus;
  if (doc.contains("kraus")) {
    if (!doc["kraus"].is_array())
      throw input_error("MeasurementDocument: 'kraus' must be an array");
    for (const auto& k : doc["kraus"]) kraus.push_back(matrix_from_json(k, "kraus"));
  }
  return LocalMeasurement::make(doc["party"].get<int>(), std::move(elements), std::move(kraus),
                                tol);
}

json measurement_to_json(const LocalMeasurement& meas) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["party"] = meas.party();
  json elements = json::array();
  for (const auto& e : meas.elements()) elements.push_back(matrix_to_json(e.matrix()));
  doc["elements"] = std::move(elements);
  json kraus = json::array();
  for (int m = 0; m < meas.num_outcomes(); ++m) kraus.push_back(matrix_to_json(meas.kraus_for(m)));
  doc["kraus"] = std::move(kraus);
  return doc;
}

GhzFamilyParams ghz_params_from_json(const json& doc) {
  if (!doc.is_object()) throw input_error("GhzParamsDocument: expected a JSON object");
  for (const char* field : {"s", "t", "x"})
    if (!doc.contains(field))
      throw input_error(std::string("GhzParamsDocument: missing field '") + field + "'");
  if (!doc["x"].is_array() || doc["x"].size() != 6)
    throw input_error("GhzParamsDocument: 'x' must be an array of six complex numbers");
  std::array<cx, 6> x;
  for (int i = 0; i < 6; ++i) x[i] = complex_from_json(doc["x"][i], "x");
  return GhzFamilyParams::make(complex_from_json(doc["s"], "s"), complex_from_json(doc["t"], "t"),
                               x);
}

json ghz_params_to_json(const GhzFamilyParams& params) {
  json doc;
  doc["s"] = complex_to_json(params.s);
  doc["t"] = complex_to_json(params.t);
  json x = json::array();
  for (const cx& xi : params.x) x.push_back(complex_to_json(xi));
  doc["x"] = std::move(x);
  return doc;
}

json report_header(double tol) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["tool"] = kToolName;
  doc["tool_version"] = kToolVersion;
  doc["tolerance"] = tol;
  return doc;
}

json ntop_report_to_json(const NtopReport& rep) {
  json j;
  j["party"] = rep.party;
  j["d"] = rep.d;
  j["t"] = rep.t;
  j["r"] = rep.r;
  j["feasible"] = rep.feasible;
  return j;
}

json check_report_to_json(const StateSet& set, const OrthogonalityReport& orth,
                          const CheckSummary* summary, double tol) {
  json doc = report_header(tol);
  doc["dims"] = set.dims();
  doc["num_states"] = set.num_states();
  doc["orthogonal"] = orth.ok;
  doc["worst_overlap"] = orth.worst_overlap;
  if (!orth.ok) doc["worst_pair"] = json::array({orth.worst_i, orth.worst_j});
  if (summary != nullptr) {
    json parties = json::array();
    for (const auto& rep : summary->reports) parties.push_back(ntop_report_to_json(rep));
    doc["parties"] = std::move(parties);
    doc["summary"] = to_string(summary->conclusion);
    doc["feasible_parties"] = summary->feasible_parties;
  } else {
    doc["summary"] = "not-orthogonal";
  }
  return doc;
}

json protocol_to_json(const OneWayProtocol& proto) {
  json doc;
  doc["alice_party"] = proto.alice_party;
  doc["bob_party"] = proto.bob_party;
  json alice = json::array();
  for (const auto& e : proto.alice.elements()) alice.push_back(matrix_to_json(e.matrix()));
  doc["alice_projectors"] = std::move(alice);
  json branches = json::array();
  for (std::size_t k = 0; k < proto.branches.size(); ++k) {
    const BobBranch& b = proto.branches[k];
    json jb;
    jb["alice_outcome"] = static_cast<int>(k);
    json projs = json::array();
    for (const auto& p : b.projectors) projs.push_back(matrix_to_json(p));
    jb["bob_projectors"] = std::move(projs);
    jb["state_for_outcome"] = b.state_for_outcome;
    jb["has_remainder"] = b.has_remainder;
    branches.push_back(std::move(jb));
  }
  doc["branches"] = std::move(branches);
  return doc;
}

json simulation_to_json(const SimulationResult& sim) {
  json doc;
  json branches = json::array();
  for (const auto& b : sim.branches) {
    json jb;
    jb["alice_outcome"] = b.alice_outcome;
    jb["bob_outcome"] = b.bob_outcome;
    jb["probability"] = b.probability;
    jb["identified"] = b.identified;
    branches.push_back(std::move(jb));
  }
  doc["branches"] = std::move(branches);
  doc["success"] = sim.success;
  doc["probability_identified"] = sim.prob_identified;
  return doc;
}

json second_round_to_json(const SecondRoundReport& rep) {
  json doc;
  doc["first_party"] = rep.first_party;
  json outcomes = json::array();
  for (const auto& out : rep.outcomes) {
    json jo;
    jo["outcome"] = out.outcome;
    json zeros = json::array();
    for (std::size_t i = 0; i < out.residual.zero_flags.size(); ++i)
      if (out.residual.zero_flags[i]) zeros.push_back(static_cast<int>(i));
    jo["zero_residual_states"] = std::move(zeros);
    json reports = json::array();
    for (const auto& r : out.other_party_reports) reports.push_back(ntop_report_to_json(r));
    jo["other_parties"] = std::move(reports);
    jo["any_feasible"] = out.any_feasible;
    outcomes.push_back(std::move(jo));
  }
  doc["outcomes"] = std::move(outcomes);
  doc["every_outcome_continues"] = rep.every_outcome_continues;
  return doc;
}

json ghz_verdict_to_json(const GhzVerdict& verdict) {
  json doc;
  doc["conclusion"] = to_string(verdict.conclusion);
  doc["case"] = std::string(1, to_char(verdict.case_label));
  doc["t_values"] = json::array({verdict.t_values[0], verdict.t_values[1], verdict.t_values[2]});
  doc["feasible_parties"] = verdict.feasible_parties;
  json evidence = json::array();
  for (const auto& ev : verdict.evidence) {
    json je;
    je["party"] = ev.party;
    je["all_consistent"] = ev.all_consistent;
    je["enabling_phase_spread"] = ev.enabling_phase_spread;
    json samples = json::array();
    for (const auto& s : ev.samples) {
      json js;
      js["p"] = s.p;
      js["offdiag"] = complex_to_json(s.offdiag);
      js["second_residual"] = s.second_residual;
      js["third_residual"] = s.third_residual;
      js["second_feasible"] = s.second_feasible;
      js["third_feasible"] = s.third_feasible;
      js["consistent"] = s.consistent;
      samples.push_back(std::move(js));
    }
    je["samples"] = std::move(samples);
    evidence.push_back(std::move(je));
  }
  doc["evidence"] = std::move(evidence);
  doc["notes"] = verdict.notes;
  return doc;
}

}  // namespace locc::io
