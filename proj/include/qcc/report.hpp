#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"
#include "qcc/spec_file.hpp"
#include "qcc/system_model.hpp"

namespace qcc {

inline constexpr int kReportVersion = 1;

struct Report {
  SpecFile input;
  DerivedParams params;
  double eps_rank = kDefaultEpsRank;
  Verdict verdict;
  std::optional<LieClosureResult> oracle;
  /// Set only when an oracle ran.
  std::optional<bool> agreement;
  double rules_ms = 0.0;
  double oracle_ms = 0.0;
};

/// Evaluates the rules (and the closure when `with_oracle`). Rules are run
/// without the oracle first so the agreement flag compares independent
/// answers; if they abstain the oracle decides.
Report make_report(const SpecFile& input, double eps_param, double eps_rank,
                   bool with_oracle);

nlohmann::ordered_json report_json(const Report& report);
std::string report_text(const Report& report);

nlohmann::ordered_json verdict_json(const Verdict& verdict);
nlohmann::ordered_json oracle_json(const LieClosureResult& oracle);

}  // namespace qcc
