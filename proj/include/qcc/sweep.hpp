#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"
#include "qcc/system_model.hpp"

namespace qcc {

struct SweepOptions {
  int count = 200;
  int nmin = 2;
  int nmax = 6;
  std::uint64_t seed = 42;
  double eps_param = kDefaultEpsParam;
  double eps_rank = kDefaultEpsRank;
  /// Worker threads; 0 picks the hardware concurrency. Results do not
  /// depend on it.
  int threads = 0;
};

/// Throws std::invalid_argument unless count >= 1 and
/// 2 <= nmin <= nmax <= 8.
void validate(const SweepOptions& options);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double unit_uniform(std::mt19937_64& rng);

/// Random N-level spec with forced equality collisions:
///   spacings: 0 with probability 0.1, else a copy of an earlier spacing with
///             probability 0.2, else Uniform(0.5, 2);
///   E_1 ~ Uniform(-1, 1);
///   dipoles:  +-a copy of an earlier |d| with probability 0.2, else
///             +-Uniform(0.5, 2);
///   with probability 0.15 the levels are shifted to make Tr(H0) = 0.
SystemSpec random_spec(std::mt19937_64& rng, int n);

struct SweepRecord {
  int index = 0;
  SystemSpec spec{{0.0, 1.0}, {1.0}};
  Verdict verdict;
  int oracle_dimension = 0;
  std::string oracle_identification;
  Conclusion oracle_conclusion = Conclusion::Undetermined;
  bool agree = true;
};

struct SweepSummary {
  SweepOptions options;
  /// Rule-engine conclusions, keyed by name.
  std::map<std::string, int> verdicts;
  /// First rule of each definite verdict.
  std::map<std::string, int> deciding_rules;
  /// Oracle conclusions.
  std::map<std::string, int> oracle;
  int undetermined = 0;
  int disagreements = 0;
  std::vector<SweepRecord> records;  ///< ordered by index

  double undetermined_rate() const;
};

SweepSummary run_sweep(const SweepOptions& options);

/// Summary without timing, so equal seeds give byte-identical output.
nlohmann::ordered_json sweep_json(const SweepSummary& summary);
std::string sweep_text(const SweepSummary& summary);

}  // namespace qcc
