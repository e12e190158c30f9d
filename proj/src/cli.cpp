#include "qcc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcc/classifier4.hpp"
#include "qcc/report.hpp"
#include "qcc/spec_file.hpp"

namespace qcc {
namespace {

// Flag beats file beats default.
double pick_tolerance(const std::optional<double>& flag,
                      const std::optional<double>& file, double fallback) {
  if (flag) return *flag;
  if (file) return *file;
  return fallback;
}

bool valid_tolerance(const std::optional<double>& x) { return !x || *x > 0; }

nlohmann::ordered_json case_json(const FourLevelCase& c) {
  nlohmann::ordered_json j;
  j["case"] = std::string(to_string(c.tag));
  j["v_subcase"] = c.v_subcase ? nlohmann::ordered_json(std::string(to_string(*c.v_subcase)))
                               : nlohmann::ordered_json(nullptr);
  j["d_condition"] = c.d_condition ? nlohmann::ordered_json(*c.d_condition)
                                   : nlohmann::ordered_json(nullptr);
  j["expected_algebra"] = {{"tag", c.expected.tag},
                           {"dimension", c.expected.dimension}};
  j["table_row"] = c.table_row;
  return j;
}

std::string row_text(const TableRow& row) {
  std::string s = row.mu_pattern;
  if (!row.condition.empty()) s += ", " + row.condition;
  return s;
}

int print_table(const Classify4Args& args, double eps_param, double eps_rank,
                std::ostream& out) {
  ClosureOptions opts;
  opts.eps_rank = eps_rank;
  const auto checks = reconstruct_table(opts, eps_param);
  int mismatches = 0;
  for (const auto& c : checks) mismatches += c.ok ? 0 : 1;
  if (args.json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : table_rows()) {
      rows.push_back({{"row", r.row},
                      {"system", r.system},
                      {"mu_pattern", r.mu_pattern},
                      {"condition", r.condition},
                      {"controllable", r.controllable}});
    }
    nlohmann::ordered_json samples = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json s;
      s["row"] = c.row.row;
      s["representative"] = c.representative;
      s["spec"] = to_json(to_spec_file(c.spec, c.representative));
      s["matched"] = case_json(c.matched);
      s["verdict"] = std::string(to_string(c.verdict.conclusion));
      s["oracle_dimension"] = c.oracle_dimension;
      s["oracle_identification"] = c.oracle_identification;
      s["ok"] = c.ok;
      samples.push_back(s);
    }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    j["samples"] = samples;
    j["mismatches"] = mismatches;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : table_rows()) {
      out << "row " << r.row << "  " << r.system << "  " << row_text(r)
          << "  -> " << (r.controllable ? "Yes" : "No") << "\n";
      for (const auto& c : checks) {
        if (c.row.row != r.row) continue;
        out << "    " << (c.ok ? "ok      " : "MISMATCH") << "  "
            << c.representative << ": " << to_string(c.matched.tag);
        if (c.matched.v_subcase) out << "/" << to_string(*c.matched.v_subcase);
        out << ", " << to_string(c.verdict.conclusion) << ", expected "
            << c.matched.expected.tag << ":" << c.matched.expected.dimension
            << ", oracle " << c.oracle_identification << ":"
            << c.oracle_dimension << "\n";
      }
    }
    out << "samples: " << checks.size() << ", mismatches: " << mismatches
        << "\n";
  }
  return mismatches == 0 ? kExitOk : kExitDisagreement;
}

}  // namespace

int cmd_check(const CheckArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (!valid_tolerance(args.eps_param) || !valid_tolerance(args.eps_rank)) {
      err << "error: tolerances must be positive\n";
      return kExitParse;
    }
    const SpecFile file = load_spec_file(args.input);
    const double eps_param =
        pick_tolerance(args.eps_param, file.eps_param, kDefaultEpsParam);
    const double eps_rank =
        pick_tolerance(args.eps_rank, file.eps_rank, kDefaultEpsRank);
    const Report report = make_report(file, eps_param, eps_rank, args.oracle);
    if (args.json) {
      out << report_json(report).dump(2) << "\n";
    } else {
      out << report_text(report);
    }
    if (report.agreement && !*report.agreement) {
      err << "error: rule verdict contradicts the closure\n";
      return kExitDisagreement;
    }
    return kExitOk;
  } catch (const SpecFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int cmd_classify4(const Classify4Args& args, std::ostream& out,
                  std::ostream& err) {
  if (!valid_tolerance(args.eps_param) || !valid_tolerance(args.eps_rank)) {
    err << "error: tolerances must be positive\n";
    return kExitParse;
  }
  if (args.table && args.input.empty()) {
    return print_table(args, args.eps_param.value_or(kDefaultEpsParam),
                       args.eps_rank.value_or(kDefaultEpsRank), out);
  }
  if (args.input.empty()) {
    err << "error: classify4 needs a spec file or --table\n";
    return kExitParse;
  }
  SpecFile file;
  SystemSpec spec{{0.0, 1.0}, {1.0}};
  try {
    file = load_spec_file(args.input);
    spec = file.to_spec();
  } catch (const SpecFileError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  const double eps_param =
      pick_tolerance(args.eps_param, file.eps_param, kDefaultEpsParam);
  const double eps_rank =
      pick_tolerance(args.eps_rank, file.eps_rank, kDefaultEpsRank);
  const DerivedParams params = derive_params(spec, eps_param);
  std::pair<FourLevelCase, Verdict> result;
  try {
    result = classify4(spec, params);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  const auto& [c, verdict] = result;
  ClosureOptions opts;
  opts.eps_rank = eps_rank;
  const LieClosureResult oracle = dynamical_algebra(spec, opts);
  const bool agree = agrees_with_oracle(verdict, oracle, params) &&
                     oracle.dimension == c.expected.dimension;
  const TableRow& row = table_rows()[c.table_row - 1];

  if (args.json) {
    nlohmann::ordered_json j;
    j["spec"] = to_json(file);
    j["classification"] = case_json(c);
    j["row"] = {{"row", row.row},
                {"mu_pattern", row.mu_pattern},
                {"condition", row.condition},
                {"controllable", row.controllable}};
    j["verdict"] = verdict_json(verdict);
    j["oracle"] = oracle_json(oracle);
    j["agreement"] = agree;
    out << j.dump(2) << "\n";
  } else {
    out << "case: " << to_string(c.tag);
    if (c.v_subcase) out << " / " << to_string(*c.v_subcase);
    if (c.d_condition) out << (*c.d_condition ? ", d1 = +-d3" : ", d1 != +-d3");
    out << "\n";
    out << "table row " << row.row << ": " << row_text(row) << " -> "
        << (row.controllable ? "Yes" : "No") << "\n";
    out << "expected algebra: " << c.expected.tag << " (dimension "
        << c.expected.dimension << ")\n";
    out << "verdict: " << to_string(verdict.conclusion) << "\n";
    out << "oracle: dimension " << oracle.dimension << " ("
        << oracle.identification.label(oracle.size) << ")\n";
    out << "agreement: " << (agree ? "yes" : "NO") << "\n";
  }
  int code = agree ? kExitOk : kExitDisagreement;
  if (args.table && code == kExitOk) {
    code = print_table(args, eps_param, eps_rank, out);
  }
  if (!agree) err << "error: classification contradicts the closure\n";
  return code;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepSummary summary;
  try {
    summary = run_sweep(args.options);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  if (args.json) {
    out << sweep_json(summary).dump(2) << "\n";
  } else {
    out << sweep_text(summary);
  }
  return summary.disagreements == 0 ? kExitOk : kExitDisagreement;
}

int cmd_model(const ModelArgs& args, std::ostream& out, std::ostream& err) {
  SpecFile file;
  try {
    const SystemSpec spec = make_model(args.params);
    file = to_spec_file(spec, args.name.empty()
                                  ? std::string(to_string(args.params.model))
                                  : args.name);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  const std::string text = dump_spec_file(file);
  if (args.emit.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(args.emit, std::ios::binary);
  if (!(f << text)) {
    err << "error: cannot write '" << args.emit << "'\n";
    return kExitDomain;
  }
  out << "wrote " << args.emit << "\n";
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Controllability of dipole-coupled N-level quantum systems"};
  app.require_subcommand(1);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Rule verdict for a spec file");
  check_cmd->add_option("input", check.input, "Spec file (JSON)")->required();
  check_cmd->add_flag("--oracle", check.oracle, "Also run the commutator closure");
  check_cmd->add_flag("--json", check.json, "Machine-readable report");
  check_cmd->add_option("--eps-param", check.eps_param, "Parameter tolerance");
  check_cmd->add_option("--eps-rank", check.eps_rank, "Closure rank tolerance");

  Classify4Args c4;
  auto* c4_cmd = app.add_subcommand("classify4", "Four-level classification");
  c4_cmd->add_option("input", c4.input, "Spec file (JSON) with N = 4");
  c4_cmd->add_flag("--table", c4.table,
                   "Reconstruct the full table and verify every row");
  c4_cmd->add_flag("--json", c4.json, "Machine-readable output");
  c4_cmd->add_option("--eps-param", c4.eps_param, "Parameter tolerance");
  c4_cmd->add_option("--eps-rank", c4.eps_rank, "Closure rank tolerance");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Random soundness sweep");
  sweep_cmd->add_option("--count", sweep.options.count, "Number of specs");
  sweep_cmd->add_option("--nmin", sweep.options.nmin, "Smallest N");
  sweep_cmd->add_option("--nmax", sweep.options.nmax, "Largest N");
  sweep_cmd->add_option("--seed", sweep.options.seed, "Random seed");
  sweep_cmd->add_option("--threads", sweep.options.threads,
                        "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--eps-param", sweep.options.eps_param,
                        "Parameter tolerance");
  sweep_cmd->add_option("--eps-rank", sweep.options.eps_rank,
                        "Closure rank tolerance");
  sweep_cmd->add_flag("--json", sweep.json, "Machine-readable summary");

  ModelArgs model;
  std::string model_name;
  std::string variant = "sqrt_ladder";
  std::optional<int> size, ell;
  auto* model_cmd = app.add_subcommand("model", "Write an example system");
  model_cmd->add_option("name", model_name,
                        "morse, box, atom, truncated_harmonic, "
                        "coupled_oscillators, degenerate_upper, alternating_odd")
      ->required();
  model_cmd->add_option("--n", size, "Number of levels");
  model_cmd->add_option("--l", ell,
                        "Oscillator length l (coupled_oscillators, "
                        "alternating_odd)");
  model_cmd->add_option("--b", model.params.b, "Morse anharmonicity B");
  model_cmd->add_option("--c", model.params.c, "Box prefactor C");
  model_cmd->add_option("--z", model.params.z, "Atomic number Z");
  model_cmd->add_option("--spacing", model.params.spacing, "Level spacing");
  model_cmd->add_option("--delta", model.params.delta, "Oscillator offset");
  model_cmd->add_option("--coupling", model.params.coupling,
                        "Junction dipole of coupled oscillators");
  model_cmd->add_option("--variant", variant,
                        "Coupled oscillator dipoles: sqrt_ladder or uniform");
  model_cmd->add_option("--e1", model.params.ground_energy, "Lowest level");
  model_cmd->add_option("--upper", model.params.upper_energy,
                        "Degenerate upper level");
  model_cmd->add_option("--mu1", model.params.mu1, "First spacing");
  model_cmd->add_option("--mu2", model.params.mu2, "Even spacings");
  model_cmd->add_option("--odd", model.params.odd_spacings,
                        "Odd spacings mu_3, mu_5, ...");
  model_cmd->add_option("--dipoles", model.params.dipoles, "Override dipoles");
  model_cmd->add_option("--label", model.name, "Name stored in the file");
  model_cmd->add_option("--emit", model.emit, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  if (*check_cmd) return cmd_check(check, out, err);
  if (*c4_cmd) return cmd_classify4(c4, out, err);
  if (*sweep_cmd) return cmd_sweep(sweep, out, err);

  try {
    model.params.model = model_from_string(model_name);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (variant == "sqrt_ladder" || variant == "d1") {
    model.params.variant = DipoleVariant::sqrt_ladder;
  } else if (variant == "uniform" || variant == "d2") {
    model.params.variant = DipoleVariant::uniform;
  } else {
    err << "error: unknown dipole variant '" << variant << "'\n";
    return kExitParse;
  }
  const bool uses_l = model.params.model == ModelKind::coupled_oscillators ||
                      model.params.model == ModelKind::alternating_odd;
  if (uses_l ? size.has_value() : ell.has_value()) {
    err << "error: model " << model_name << " takes "
        << (uses_l ? "--l" : "--n") << "\n";
    return kExitParse;
  }
  if (uses_l && ell) model.params.size = *ell;
  if (!uses_l && size) model.params.size = *size;
  return cmd_model(model, out, err);
}

}  // namespace qcc
