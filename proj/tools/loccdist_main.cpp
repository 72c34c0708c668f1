// Command-line front end: feasibility reports, POVM construction, one-way
// protocol synthesis, second-round analysis and the built-in example sets.
//
// Exit codes: 0 success; 1 when the set is not mutually orthogonal or a
// required NTOP measurement does not exist; 2 for input errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locc/cases.hpp"
#include "locc/ghz.hpp"
#include "locc/io.hpp"
#include "locc/ntop.hpp"
#include "locc/protocol.hpp"
#include "locc/version.hpp"

namespace {

using locc::io::json;

void write_json_output(const json& doc, const std::string& path) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw locc::input_error("cannot write file: " + path);
  out << doc.dump(2) << "\n";
}

std::string format_complex(locc::cx z) {
  std::ostringstream os;
  os << std::setprecision(6) << z.real();
  if (z.imag() != 0.0) os << (z.imag() >= 0 ? "+" : "-") << std::abs(z.imag()) << "i";
  return os.str();
}

void print_matrix(const locc::CMatrix& m, const std::string& indent) {
  for (int r = 0; r < m.dim(); ++r) {
    std::cout << indent << "[";
    for (int c = 0; c < m.dim(); ++c)
      std::cout << format_complex(m(r, c)) << (c + 1 < m.dim() ? ", " : "");
    std::cout << "]\n";
  }
}

void print_party_line(const locc::NtopReport& rep) {
  std::cout << "party " << rep.party << " (d=" << rep.d << "): t=" << rep.t
            << ", d^2-1=" << rep.d * rep.d - 1 << ", r=" << rep.r
            << " -> NTOP feasible: " << (rep.feasible ? "yes (can go first)" : "no (cannot go first)")
            << "\n";
}

locc::StateSet load_set(const std::string& path) {
  return locc::io::state_set_from_json(locc::io::load_json(path));
}

int run_check(const std::string& file, double tol, const std::string& json_out) {
  const locc::StateSet set = load_set(file);
  std::cout << "state set: " << set.num_states() << " states, dims [";
  for (std::size_t i = 0; i < set.dims().size(); ++i)
    std::cout << set.dims()[i] << (i + 1 < set.dims().size() ? "," : "");
  std::cout << "]\n";

  const locc::OrthogonalityReport orth = locc::check_mutual_orthogonality(set, tol);
  if (!orth.ok) {
    std::cout << "not mutually orthogonal: states " << orth.worst_i << " and " << orth.worst_j
              << " have scaled overlap " << std::scientific << std::setprecision(3)
              << orth.worst_overlap << "\n";
    write_json_output(locc::io::check_report_to_json(set, orth, nullptr, tol), json_out);
    return 1;
  }
  std::cout << "orthogonality: ok (worst scaled overlap " << std::scientific
            << std::setprecision(3) << orth.worst_overlap << ")\n"
            << std::defaultfloat;

  const locc::CheckSummary summary = locc::ntop_check_all(set, tol);
  for (const auto& rep : summary.reports) print_party_line(rep);
  if (summary.conclusion == locc::Conclusion::locc_indistinguishable) {
    std::cout << "summary: LOCC-indistinguishable (no observer can make an NTOP measurement)\n";
  } else {
    std::cout << "summary: inconclusive (NTOP feasible for";
    for (int p : summary.feasible_parties) std::cout << " party " << p;
    std::cout << ")\n";
  }
  write_json_output(locc::io::check_report_to_json(set, orth, &summary, tol), json_out);
  return 0;
}

int run_construct_povm(const std::string& file, int party, const std::vector<double>& direction,
                       double tol, const std::string& json_out) {
  const locc::StateSet set = load_set(file);
  const locc::NtopReport rep = locc::ntop_check(set, party, tol);
  print_party_line(rep);
  if (!rep.feasible) {
    std::cout << "no NTOP measurement exists: t = " << rep.t << " = d^2-1, the operator family "
              << "already spans all traceless directions\n";
    return 1;
  }
  const locc::LocalMeasurement meas =
      direction.empty() ? locc::construct_ntop_povm(rep) : locc::construct_ntop_povm(rep, direction);
  const locc::PreservationReport pres = locc::verify_orthogonality_preserving(meas, set, tol);
  for (int m = 0; m < meas.num_outcomes(); ++m) {
    std::cout << "element " << m << " (trace " << std::setprecision(6)
              << meas.elements()[m].trace() << "):\n";
    print_matrix(meas.elements()[m].matrix(), "  ");
  }
  std::cout << "orthogonality-preserving: " << (pres.ok ? "yes" : "NO") << ", nontrivial: "
            << (pres.trivial ? "NO" : "yes") << "\n";
  write_json_output(locc::io::measurement_to_json(meas), json_out);
  return 0;
}

int run_one_way(const std::string& file, double tol, const std::string& json_out) {
  const locc::StateSet set = load_set(file);
  const locc::OneWayProtocol proto = locc::one_way_protocol_2xn(set, tol);
  std::cout << "alice = party " << proto.alice_party << " (qubit), bob = party "
            << proto.bob_party << "\n";
  for (int k = 0; k < proto.alice.num_outcomes(); ++k) {
    std::cout << "alice projector " << k << ":\n";
    print_matrix(proto.alice.elements()[k].matrix(), "  ");
    const locc::BobBranch& b = proto.branches[k];
    std::cout << "  bob branch: " << b.projectors.size() << " projectors, outcome -> state map:";
    for (std::size_t q = 0; q < b.state_for_outcome.size(); ++q)
      std::cout << " " << q << "->" << set.names()[b.state_for_outcome[q]];
    std::cout << (b.has_remainder ? " (plus remainder projector)" : "") << "\n";
  }

  json sims = json::array();
  bool all_ok = true;
  for (int i = 0; i < set.num_states(); ++i) {
    const locc::SimulationResult sim = locc::simulate_protocol(proto, set, i);
    all_ok = all_ok && sim.success;
    std::cout << "state " << set.names()[i] << ": success probability " << std::setprecision(10)
              << sim.prob_identified << (sim.success ? "" : "  [FAILURE]") << "\n";
    for (const auto& br : sim.branches)
      std::cout << "    alice " << br.alice_outcome << " / bob " << br.bob_outcome << ": p="
                << std::setprecision(6) << br.probability << " -> "
                << (br.identified >= 0 ? set.names()[br.identified] : "impossible") << "\n";
    sims.push_back(locc::io::simulation_to_json(sim));
  }
  std::cout << "overall: " << (all_ok ? "one-way distinguishable" : "protocol defect") << "\n";

  json doc = locc::io::report_header(tol);
  doc["summary"] = locc::to_string(all_ok ? locc::Conclusion::one_way_distinguishable
                                          : locc::Conclusion::inconclusive);
  doc["protocol"] = locc::io::protocol_to_json(proto);
  doc["simulations"] = std::move(sims);
  write_json_output(doc, json_out);
  return all_ok ? 0 : 1;
}

int run_second_round(const std::string& file, int party, const std::string& meas_file, double tol,
                     const std::string& json_out) {
  const locc::StateSet set = load_set(file);
  const locc::LocalMeasurement meas =
      locc::io::measurement_from_json(locc::io::load_json(meas_file), tol);
  const locc::SecondRoundReport rep = locc::second_round_report(set, party, meas, tol);
  std::cout << "first party " << party << ", " << meas.num_outcomes() << " outcomes\n";
  for (const auto& out : rep.outcomes) {
    std::cout << "outcome " << out.outcome << ":";
    bool any_zero = false;
    for (std::size_t i = 0; i < out.residual.zero_flags.size(); ++i)
      if (out.residual.zero_flags[i]) {
        std::cout << (any_zero ? "," : " zero residuals:") << " " << set.names()[i];
        any_zero = true;
      }
    std::cout << "\n";
    for (const auto& r : out.other_party_reports) {
      std::cout << "  ";
      print_party_line(r);
    }
    if (!out.any_feasible)
      std::cout << "  -> no feasible continuation for this outcome\n";
  }
  std::cout << (rep.every_outcome_continues
                    ? "every outcome admits a continuation\n"
                    : "some outcome has no continuation: the first measurement is inappropriate\n");
  write_json_output(locc::io::second_round_to_json(rep), json_out);
  return 0;
}

int run_ghz_verdict(const std::string& params_file, double tol, const std::string& json_out) {
  const locc::GhzFamilyParams params =
      locc::io::ghz_params_from_json(locc::io::load_json(params_file));
  const locc::GhzVerdict verdict = locc::ghz_family_verdict(params, tol);
  std::cout << "GHZ three-state family\n"
            << "t values: t_a=" << verdict.t_values[0] << " t_b=" << verdict.t_values[1]
            << " t_c=" << verdict.t_values[2] << "\n"
            << "case: " << locc::to_char(verdict.case_label) << "\n"
            << "conclusion: " << locc::to_string(verdict.conclusion) << "\n";
  for (const auto& note : verdict.notes) std::cout << "note: " << note << "\n";
  write_json_output(locc::io::ghz_verdict_to_json(verdict), json_out);
  return 0;
}

int run_examples(const std::string& name, const std::string& params_file) {
  locc::StateSet set;
  if (name == "bennett9") {
    set = locc::case_bennett9();
  } else if (name == "upb4") {
    set = locc::case_upb4();
  } else if (name == "upb4-variation") {
    set = locc::case_upb4_variation();
  } else if (name == "ghz3") {
    const locc::GhzFamilyParams params =
        params_file.empty() ? locc::default_ghz_params()
                            : locc::io::ghz_params_from_json(locc::io::load_json(params_file));
    set = locc::case_ghz3(params);
  } else if (name == "bells2" || name == "bells3" || name == "bells4") {
    set = locc::case_bells(name.back() - '0');
  } else {
    throw locc::input_error(
        "unknown example '" + name +
        "' (available: bennett9, upb4, upb4-variation, ghz3, bells2, bells3, bells4)");
  }
  std::cout << locc::io::state_set_to_json(set).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(locc::kToolName) +
               " - local distinguishability analysis for orthogonal multipartite state sets"};
  app.require_subcommand(1);

  double tol = locc::kDefaultTol;
  app.add_option("--tol", tol, "numerical tolerance (default 1e-9)")
      ->envname("LOCCDIST_TOL");

  std::string file, json_out, meas_file, params_file, example_name;
  int party = 0;
  std::vector<double> direction;

  auto* check = app.add_subcommand("check", "per-party NTOP feasibility report");
  check->add_option("file", file, "StateSetDocument path or '-' for stdin")->required();
  check->add_option("--json", json_out, "write a ReportDocument to this path");
  check->fallthrough();

  auto* povm = app.add_subcommand("construct-povm", "build a two-element NTOP POVM");
  povm->add_option("file", file, "StateSetDocument path or '-' for stdin")->required();
  povm->add_option("--party", party, "party index")->required();
  povm->add_option("--direction", direction, "coefficient direction of length r");
  povm->add_option("--json", json_out, "write a MeasurementDocument to this path");
  povm->fallthrough();

  auto* oneway = app.add_subcommand("one-way", "synthesize and simulate a 2xn one-way protocol");
  oneway->add_option("file", file, "StateSetDocument path or '-' for stdin")->required();
  oneway->add_option("--json", json_out, "write protocol and simulations to this path");
  oneway->fallthrough();

  auto* second = app.add_subcommand("second-round", "residual analysis after a first measurement");
  second->add_option("file", file, "StateSetDocument path or '-' for stdin")->required();
  second->add_option("--party", party, "party that measures first")->required();
  second->add_option("--measurement", meas_file, "MeasurementDocument path")->required();
  second->add_option("--json", json_out, "write the report to this path");
  second->fallthrough();

  auto* ghz = app.add_subcommand("ghz-verdict", "indistinguishability verdict for the GHZ family");
  ghz->add_option("--params", params_file, "GhzParamsDocument path")->required();
  ghz->add_option("--json", json_out, "write the verdict to this path");
  ghz->fallthrough();

  auto* examples = app.add_subcommand("examples", "emit a built-in case as a StateSetDocument");
  examples->add_option("name", example_name, "bennett9, upb4, upb4-variation, ghz3, bells2..4")
      ->required();
  examples->add_option("--params", params_file, "GhzParamsDocument for ghz3");
  examples->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, tol, json_out);
    if (povm->parsed()) return run_construct_povm(file, party, direction, tol, json_out);
    if (oneway->parsed()) return run_one_way(file, tol, json_out);
    if (second->parsed()) return run_second_round(file, party, meas_file, tol, json_out);
    if (ghz->parsed()) return run_ghz_verdict(params_file, tol, json_out);
    if (examples->parsed()) return run_examples(example_name, params_file);
  } catch (const locc::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const locc::orthogonality_error& e) {
    std::cerr << "orthogonality error: " << e.what() << "\n";
    return 1;
  } catch (const locc::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
