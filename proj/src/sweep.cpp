#include "qcc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qcc {
namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

bool coin(std::mt19937_64& rng, double p) { return unit_uniform(rng) < p; }

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(unit_uniform(rng) * n));
}

}  // namespace

void validate(const SweepOptions& o) {
  if (o.count < 1) throw std::invalid_argument("sweep count must be >= 1");
  if (o.nmin < 2 || o.nmin > o.nmax || o.nmax > 8) {
    throw std::invalid_argument("sweep needs 2 <= nmin <= nmax <= 8");
  }
  if (!(o.eps_param > 0) || !(o.eps_rank > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

SystemSpec random_spec(std::mt19937_64& rng, int n) {
  std::vector<double> mu;
  for (int k = 1; k < n; ++k) {
    if (coin(rng, 0.1)) {
      mu.push_back(0.0);
    } else if (!mu.empty() && coin(rng, 0.2)) {
      mu.push_back(mu[pick(rng, mu.size())]);
    } else {
      mu.push_back(uniform(rng, 0.5, 2.0));
    }
  }
  std::vector<double> levels{uniform(rng, -1.0, 1.0)};
  for (double m : mu) levels.push_back(levels.back() + m);

  std::vector<double> d;
  for (int k = 1; k < n; ++k) {
    double magnitude;
    if (!d.empty() && coin(rng, 0.2)) {
      magnitude = std::abs(d[pick(rng, d.size())]);
    } else {
      magnitude = uniform(rng, 0.5, 2.0);
    }
    d.push_back(coin(rng, 0.5) ? magnitude : -magnitude);
  }

  if (coin(rng, 0.15)) {
    const double mean = std::accumulate(levels.begin(), levels.end(), 0.0) / n;
    for (double& e : levels) e -= mean;
  }
  return SystemSpec(levels, d);
}

double SweepSummary::undetermined_rate() const {
  return records.empty() ? 0.0
                         : static_cast<double>(undetermined) / records.size();
}

SweepSummary run_sweep(const SweepOptions& options) {
  validate(options);
  SweepSummary s;
  s.options = options;

  // Specs are drawn sequentially so the stream does not depend on threading.
  std::mt19937_64 rng(options.seed);
  s.records.resize(options.count);
  for (int i = 0; i < options.count; ++i) {
    const int n = options.nmin + static_cast<int>(pick(
                                     rng, options.nmax - options.nmin + 1));
    s.records[i].index = i;
    s.records[i].spec = random_spec(rng, n);
  }

  ClosureOptions copts;
  copts.eps_rank = options.eps_rank;
  auto evaluate = [&](SweepRecord& r) {
    const DerivedParams params = derive_params(r.spec, options.eps_param);
    r.verdict = full_verdict(r.spec, params);
    const LieClosureResult oracle = dynamical_algebra(r.spec, copts);
    r.oracle_dimension = oracle.dimension;
    r.oracle_identification = oracle.identification.tag();
    r.oracle_conclusion = oracle_conclusion(oracle, params);
    r.agree = agrees_with_oracle(r.verdict, oracle, params);
  };

  int threads = options.threads > 0
                    ? options.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, options.count);
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < options.count; i = next++) evaluate(s.records[i]);
    });
  }
  for (auto& t : pool) t.join();

  for (const auto& r : s.records) {
    ++s.verdicts[std::string(to_string(r.verdict.conclusion))];
    ++s.oracle[std::string(to_string(r.oracle_conclusion))];
    if (r.verdict.conclusion == Conclusion::Undetermined) {
      ++s.undetermined;
    } else {
      ++s.deciding_rules[r.verdict.provenance.front().rule];
    }
    if (!r.agree) ++s.disagreements;
  }
  return s;
}

nlohmann::ordered_json sweep_json(const SweepSummary& s) {
  nlohmann::ordered_json j;
  j["count"] = s.options.count;
  j["nmin"] = s.options.nmin;
  j["nmax"] = s.options.nmax;
  j["seed"] = s.options.seed;
  j["tolerances"] = {{"eps_param", s.options.eps_param},
                     {"eps_rank", s.options.eps_rank}};
  j["verdicts"] = s.verdicts;
  j["deciding_rules"] = s.deciding_rules;
  j["oracle"] = s.oracle;
  j["undetermined"] = s.undetermined;
  j["undetermined_rate"] = s.undetermined_rate();
  j["disagreements"] = s.disagreements;
  auto bad = nlohmann::ordered_json::array();
  for (const auto& r : s.records) {
    if (r.agree) continue;
    nlohmann::ordered_json e;
    e["index"] = r.index;
    e["levels"] = std::vector<double>(r.spec.levels().begin(), r.spec.levels().end());
    e["dipoles"] = std::vector<double>(r.spec.dipoles().begin(), r.spec.dipoles().end());
    e["verdict"] = std::string(to_string(r.verdict.conclusion));
    e["oracle_dimension"] = r.oracle_dimension;
    e["oracle_identification"] = r.oracle_identification;
    bad.push_back(e);
  }
  j["disagreeing_specs"] = bad;
  return j;
}

std::string sweep_text(const SweepSummary& s) {
  std::ostringstream out;
  out << "sweep: " << s.options.count << " specs, N in [" << s.options.nmin
      << ", " << s.options.nmax << "], seed " << s.options.seed << "\n";
  out << "rule verdicts:\n";
  for (const auto& [k, v] : s.verdicts) out << "  " << k << ": " << v << "\n";
  out << "deciding rules:\n";
  for (const auto& [k, v] : s.deciding_rules) out << "  " << k << ": " << v << "\n";
  out << "oracle conclusions:\n";
  for (const auto& [k, v] : s.oracle) out << "  " << k << ": " << v << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", s.undetermined_rate());
  out << "undetermined: " << s.undetermined << " (rate " << buf << ")\n";
  out << "disagreements: " << s.disagreements << "\n";
  for (const auto& r : s.records) {
    if (r.agree) continue;
    out << "  spec #" << r.index << ": rules say "
        << to_string(r.verdict.conclusion) << ", oracle dimension "
        << r.oracle_dimension << " (" << r.oracle_identification << ")\n";
  }
  return out.str();
}

}  // namespace qcc
