#include "qcc/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

namespace qcc {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join(const std::vector<double>& xs) {
  std::string out = "(";
  char buf[32];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.10g", xs[i]);
    out += (i ? ", " : "") + std::string(buf);
  }
  return out + ")";
}

}  // namespace

Report make_report(const SpecFile& input, double eps_param, double eps_rank,
                   bool with_oracle) {
  Report r;
  r.input = input;
  r.eps_rank = eps_rank;
  const SystemSpec spec = input.to_spec();
  auto start = Clock::now();
  r.params = derive_params(spec, eps_param);
  r.verdict = full_verdict(spec, r.params);
  r.rules_ms = ms_since(start);
  if (with_oracle) {
    start = Clock::now();
    ClosureOptions opts;
    opts.eps_rank = eps_rank;
    r.oracle = dynamical_algebra(spec, opts);
    r.oracle_ms = ms_since(start);
    r.agreement = agrees_with_oracle(r.verdict, *r.oracle, r.params);
    if (r.verdict.conclusion == Conclusion::Undetermined) {
      r.verdict = full_verdict(spec, r.params, r.oracle);
    }
  }
  return r;
}

nlohmann::ordered_json verdict_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["conclusion"] = std::string(to_string(v.conclusion));
  auto prov = nlohmann::ordered_json::array();
  for (const auto& f : v.provenance) {
    nlohmann::ordered_json e;
    e["rule"] = f.rule;
    e["p"] = f.p ? nlohmann::ordered_json(*f.p) : nlohmann::ordered_json(nullptr);
    e["k"] = f.k ? nlohmann::ordered_json(*f.k) : nlohmann::ordered_json(nullptr);
    e["detail"] = f.detail;
    prov.push_back(e);
  }
  j["provenance"] = prov;
  j["notes"] = v.notes;
  j["expected_dimension"] = v.expected_dimension
                                ? nlohmann::ordered_json(*v.expected_dimension)
                                : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json oracle_json(const LieClosureResult& o) {
  nlohmann::ordered_json j;
  j["dimension"] = o.dimension;
  j["identification"] = o.identification.tag();
  j["label"] = o.identification.label(o.size);
  j["contains_identity"] = o.contains_identity;
  j["generations"] = o.generations;
  j["commutators"] = o.commutators;
  j["fragile"] = o.fragile;
  j["grading_blocks"] = o.grading_blocks;
  j["max_error_bound"] = o.max_error_bound();
  return j;
}

nlohmann::ordered_json report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["report_version"] = kReportVersion;
  j["spec"] = to_json(r.input);
  nlohmann::ordered_json derived;
  derived["size"] = static_cast<int>(r.params.mu.size()) + 1;
  derived["mu"] = r.params.mu;
  derived["v"] = r.params.v;
  derived["trace_h0"] = r.params.trace_h0;
  derived["trace_zero"] = r.params.trace_zero();
  derived["equally_spaced"] = r.params.equally_spaced;
  j["derived"] = derived;
  j["tolerances"] = {{"eps_param", r.params.eps_param}, {"eps_rank", r.eps_rank}};
  j["verdict"] = verdict_json(r.verdict);
  j["oracle"] = r.oracle ? oracle_json(*r.oracle) : nlohmann::ordered_json(nullptr);
  j["agreement"] = r.agreement ? nlohmann::ordered_json(*r.agreement)
                               : nlohmann::ordered_json(nullptr);
  j["timing_ms"] = {{"rules", r.rules_ms}, {"oracle", r.oracle_ms}};
  return j;
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  const int n = static_cast<int>(r.params.mu.size()) + 1;
  out << "system: " << (r.input.name.empty() ? "(unnamed)" : r.input.name)
      << "  N = " << n << "\n";
  const SystemSpec spec = r.input.to_spec();
  out << "  levels:  "
      << join({spec.levels().begin(), spec.levels().end()}) << "\n";
  out << "  dipoles: "
      << join({spec.dipoles().begin(), spec.dipoles().end()}) << "\n";
  out << "  mu:      " << join(r.params.mu) << "\n";
  out << "  v:       " << join(r.params.v) << "\n";
  out << "  Tr(H0):  " << r.params.trace_h0
      << (r.params.trace_zero() ? " (zero)" : "") << "\n";
  out << "  equally spaced: " << (r.params.equally_spaced ? "yes" : "no") << "\n";
  out << "  tolerances: eps_param " << r.params.eps_param << ", eps_rank "
      << r.eps_rank << "\n";
  out << "verdict: " << to_string(r.verdict.conclusion) << "\n";
  if (r.verdict.expected_dimension) {
    out << "  expected dimension: " << *r.verdict.expected_dimension << "\n";
  }
  for (const auto& f : r.verdict.provenance) {
    out << "  [" << f.rule;
    if (f.p) out << " p=" << *f.p;
    if (f.k) out << " k=" << *f.k;
    out << "] " << f.detail << "\n";
  }
  for (const auto& note : r.verdict.notes) out << "  note: " << note << "\n";
  if (r.oracle) {
    const auto& o = *r.oracle;
    out << "oracle: dimension " << o.dimension << " ("
        << o.identification.label(o.size) << "), identification "
        << o.identification.tag() << ", contains iI "
        << (o.contains_identity ? "yes" : "no") << ", " << o.generations
        << " generations, " << o.commutators << " commutators, "
        << o.fragile << " fragile elements, max error bound "
        << o.max_error_bound() << "\n";
    out << "agreement: " << (*r.agreement ? "yes" : "NO") << "\n";
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "timing: rules %.3f ms, oracle %.3f ms\n",
                r.rules_ms, r.oracle_ms);
  out << buf;
  return out.str();
}

}  // namespace qcc
