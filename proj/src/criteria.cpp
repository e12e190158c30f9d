#include "qcc/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "qcc/classifier4.hpp"

namespace qcc {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

int full_dimension(const DerivedParams& p) {
  const int n = static_cast<int>(p.mu.size()) + 1;
  return n * n;
}

Verdict positive_verdict(const DerivedParams& params) {
  Verdict v;
  if (params.trace_zero()) {
    v.conclusion = Conclusion::ControllableUpToPhase;
    v.expected_dimension = full_dimension(params) - 1;
    v.notes.push_back(
        "Tr(H0) = 0: the algebra is su(N); every unitary is reachable up to a "
        "global phase");
  } else {
    v.conclusion = Conclusion::CompletelyControllable;
    v.expected_dimension = full_dimension(params);
  }
  return v;
}

Verdict negative_verdict(std::optional<int> dim) {
  Verdict v;
  v.conclusion = Conclusion::NotControllable;
  v.expected_dimension = dim;
  return v;
}

// mu_p (1-based) is nonzero and differs from every other spacing.
bool isolated_nonzero(std::span<const double> values,
                      const ScaledComparator& cmp, int p) {
  const double x = values[p - 1];
  if (cmp.is_zero(x)) return false;
  for (int n = 1; n <= static_cast<int>(values.size()); ++n) {
    if (n != p && cmp.equal(values[n - 1], x)) return false;
  }
  return true;
}

// Dipole condition attached to an isolated transition p. Returns the witness
// k (empty for N = 2, where the lone transition needs none) or nothing
// when the condition fails.
struct DipoleWitness {
  bool ok = false;
  std::optional<int> k;
  std::string detail;
};

DipoleWitness dipole_witness(const SystemSpec& spec,
                             const DerivedParams& params, int p) {
  const int n = spec.size();
  DipoleWitness w;
  if (2 * p != n) {
    w.ok = true;
    w.k = std::min(p, n - p);
    w.detail = "k = min(p, N-p) pairs a dipole with the vanishing boundary "
               "dipole";
    return w;
  }
  if (n == 2) {
    w.ok = true;
    w.detail = "single transition, no dipole condition";
    return w;
  }
  if (auto k = find_asymmetric_k(spec, params, p)) {
    w.ok = true;
    w.k = k;
    w.detail = "|d_" + std::to_string(p - *k) + "| != |d_" +
               std::to_string(p + *k) + "|";
  }
  return w;
}

void add_fragile_pairs(std::span<const double> values,
                       const ScaledComparator& cmp, const std::string& name,
                       std::vector<std::string>& notes) {
  const int n = static_cast<int>(values.size());
  for (int i = 0; i < n; ++i) {
    if (cmp.fragile(values[i], 0.0)) {
      notes.push_back(name + "_" + std::to_string(i + 1) + " = " +
                      format_double(values[i]) +
                      " is within 10x eps_param of zero; verdict is "
                      "numerically fragile");
    }
    for (int j = i + 1; j < n; ++j) {
      if (cmp.fragile(values[i], values[j])) {
        notes.push_back(name + "_" + std::to_string(i + 1) + " and " + name +
                        "_" + std::to_string(j + 1) + " differ by " +
                        format_double(std::abs(values[i] - values[j])) +
                        ", within 10x eps_param; verdict is numerically "
                        "fragile");
      }
    }
  }
}

std::vector<std::string> fragility_notes(const SystemSpec& spec,
                                         const DerivedParams& params) {
  std::vector<std::string> notes;
  add_fragile_pairs(params.mu, params.mu_cmp(), "mu", notes);
  std::vector<double> magnitudes;
  for (double d : spec.dipoles()) magnitudes.push_back(std::abs(d));
  add_fragile_pairs(magnitudes, params.dipole_cmp(), "|d|", notes);
  if (params.equally_spaced) add_fragile_pairs(params.v, params.v_cmp(), "v", notes);
  const ScaledComparator trace(params.eps_param, params.trace_scale);
  if (trace.fragile(params.trace_h0, 0.0)) {
    notes.push_back("Tr(H0) = " + format_double(params.trace_h0) +
                    " is within 10x eps_param of zero");
  }
  return notes;
}

void merge(Verdict& into, const Verdict& from) {
  into.provenance.insert(into.provenance.end(), from.provenance.begin(),
                         from.provenance.end());
  for (const auto& n : from.notes) {
    if (std::find(into.notes.begin(), into.notes.end(), n) == into.notes.end()) {
      into.notes.push_back(n);
    }
  }
}

}  // namespace

std::string_view to_string(Conclusion c) {
  switch (c) {
    case Conclusion::CompletelyControllable: return "CompletelyControllable";
    case Conclusion::ControllableUpToPhase: return "ControllableUpToPhase";
    case Conclusion::NotControllable: return "NotControllable";
    case Conclusion::Undetermined: return "Undetermined";
  }
  return "Undetermined";
}

Conclusion conclusion_from_string(std::string_view s) {
  for (auto c : {Conclusion::CompletelyControllable,
                 Conclusion::ControllableUpToPhase,
                 Conclusion::NotControllable, Conclusion::Undetermined}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown conclusion '" + std::string(s) + "'");
}

bool check_decomposable(const SystemSpec& spec, const DerivedParams& params) {
  const auto cmp = params.dipole_cmp();
  return std::any_of(spec.dipoles().begin(), spec.dipoles().end(),
                     [&](double d) { return cmp.is_zero(d); });
}

bool check_decomposable(const SystemSpec& spec, double eps_param) {
  return check_decomposable(spec, derive_params(spec, eps_param));
}

std::optional<int> find_asymmetric_k(const SystemSpec& spec,
                                     const DerivedParams& params, int p) {
  const int n = spec.size();
  const auto cmp = params.dipole_cmp();
  for (int k = 1; k <= std::min(p, n - p); ++k) {
    if (!cmp.equal(std::abs(spec.dipole(p - k)), std::abs(spec.dipole(p + k)))) {
      return k;
    }
  }
  return std::nullopt;
}

std::optional<Verdict> check_theorem1(const SystemSpec& spec,
                                      const DerivedParams& params) {
  const int n = spec.size();
  const auto cmp = params.mu_cmp();
  Verdict v = positive_verdict(params);
  if (isolated_nonzero(params.mu, cmp, 1)) {
    v.provenance.push_back({std::string(kRuleTheorem1), 1, std::nullopt,
                            "mu_1 != 0 and differs from every other spacing"});
  }
  if (n > 2 && isolated_nonzero(params.mu, cmp, n - 1)) {
    v.provenance.push_back(
        {std::string(kRuleTheorem1), n - 1, std::nullopt,
         "mu_{N-1} != 0 and differs from every other spacing"});
  }
  if (v.provenance.empty()) return std::nullopt;
  return v;
}

std::optional<Verdict> check_theorem2(const SystemSpec& spec,
                                      const DerivedParams& params) {
  const int n = spec.size();
  const auto cmp = params.mu_cmp();
  Verdict v = positive_verdict(params);
  for (int p = 1; p <= n - 1; ++p) {
    if (!isolated_nonzero(params.mu, cmp, p)) continue;
    const DipoleWitness w = dipole_witness(spec, params, p);
    if (!w.ok) continue;
    v.provenance.push_back({std::string(kRuleTheorem2), p, w.k,
                            "mu_" + std::to_string(p) +
                                " is nonzero and isolated; " + w.detail});
  }
  if (v.provenance.empty()) return std::nullopt;
  return v;
}

std::optional<Verdict> check_theorem3(const SystemSpec& spec,
                                      const DerivedParams& params) {
  if (!params.equally_spaced || params.mu_cmp().is_zero(params.mu[0])) {
    return std::nullopt;
  }
  const int n = spec.size();
  const auto cmp = params.v_cmp();
  Verdict v = positive_verdict(params);
  for (int p = 1; p <= n - 1; ++p) {
    if (!isolated_nonzero(params.v, cmp, p)) continue;
    const DipoleWitness w = dipole_witness(spec, params, p);
    if (!w.ok) continue;
    v.provenance.push_back({std::string(kRuleTheorem3), p, w.k,
                            "equal spacing, v_" + std::to_string(p) + " = " +
                                format_double(params.v[p - 1]) +
                                " is nonzero and isolated; " + w.detail});
  }
  if (v.provenance.empty()) return std::nullopt;
  return v;
}

std::optional<Verdict> check_theorem4(const SystemSpec& spec,
                                      const DerivedParams& params) {
  const int n = spec.size();
  if (n <= 2 || !params.equally_spaced ||
      params.mu_cmp().is_zero(params.mu[0])) {
    return std::nullopt;
  }
  const auto cmp = params.v_cmp();
  const bool all_equal =
      std::all_of(params.v.begin(), params.v.end(),
                  [&](double x) { return cmp.equal(x, params.v[0]); });
  if (!all_equal) return std::nullopt;
  const bool traceless = params.trace_zero();
  Verdict v = negative_verdict(traceless ? 3 : 4);
  v.provenance.push_back(
      {std::string(kRuleTheorem4), std::nullopt, std::nullopt,
       "equal spacing and all v_n = " + format_double(params.v[0]) +
           ": i H0, X, Y, Z span the algebra"});
  v.notes.push_back(traceless
                        ? "expected closure dimension 3 (su(2); Tr(H0) = 0 puts "
                          "i H0 inside span{X, Y, Z})"
                        : "expected closure dimension 4 (u(2))");
  return v;
}

std::optional<Verdict> check_theorem5(const SystemSpec& spec,
                                      const DerivedParams& params) {
  const int n = spec.size();
  if (n <= 2 || !params.equally_spaced ||
      params.mu_cmp().is_zero(params.mu[0])) {
    return std::nullopt;
  }
  const auto cmp = params.dipole_cmp();
  const double first = std::abs(spec.dipoles()[0]);
  const bool uniform =
      std::all_of(spec.dipoles().begin(), spec.dipoles().end(),
                  [&](double d) { return cmp.equal(std::abs(d), first); });
  if (!uniform) return std::nullopt;
  Verdict v = negative_verdict(std::nullopt);
  v.provenance.push_back({std::string(kRuleTheorem5), std::nullopt,
                          std::nullopt,
                          "equal spacing and uniform |d_n| = " +
                              format_double(first)});
  if (!cmp.equal(first, 1.0)) {
    v.notes.push_back("uniform dipole " + format_double(first) +
                      " reduced to d_n = 1 by rescaling H1, which leaves the "
                      "generated algebra unchanged");
  }
  return v;
}

std::optional<Verdict> check_fully_degenerate(const SystemSpec& spec,
                                              const DerivedParams& params) {
  const auto cmp = params.mu_cmp();
  if (!std::all_of(params.mu.begin(), params.mu.end(),
                   [&](double m) { return cmp.is_zero(m); })) {
    return std::nullopt;
  }
  const bool h0_zero = std::all_of(spec.levels().begin(), spec.levels().end(),
                                   [](double e) { return e == 0.0; });
  Verdict v = negative_verdict(h0_zero ? 1 : 2);
  v.provenance.push_back({std::string(kRuleFullyDegenerate), std::nullopt,
                          std::nullopt,
                          "all levels coincide: i H0 is a multiple of i I"});
  return v;
}

Verdict full_verdict(const SystemSpec& spec, const DerivedParams& params,
                     const std::optional<LieClosureResult>& oracle) {
  Verdict out;
  out.notes = fragility_notes(spec, params);

  if (check_decomposable(spec, params)) {
    out.conclusion = Conclusion::NotControllable;
    const auto cmp = params.dipole_cmp();
    for (int n = 1; n < spec.size(); ++n) {
      if (cmp.is_zero(spec.dipole(n))) {
        out.provenance.push_back(
            {std::string(kRuleDecomposable), n, std::nullopt,
             "d_" + std::to_string(n) + " vanishes: the chain splits into "
             "independent blocks"});
      }
    }
    return out;
  }

  bool decided = false;
  for (auto rule : {check_theorem1, check_theorem2, check_theorem3}) {
    if (auto v = rule(spec, params)) {
      if (!decided) {
        out.conclusion = v->conclusion;
        out.expected_dimension = v->expected_dimension;
        decided = true;
      }
      merge(out, *v);
    }
  }
  if (decided) return out;

  for (auto rule : {check_theorem4, check_theorem5, check_fully_degenerate}) {
    if (auto v = rule(spec, params)) {
      if (!decided) {
        out.conclusion = v->conclusion;
        out.expected_dimension = v->expected_dimension;
        decided = true;
      }
      merge(out, *v);
    }
  }
  if (decided) return out;

  if (spec.size() == 4) {
    auto [c, v] = classify4(spec, params);
    out.conclusion = v.conclusion;
    out.expected_dimension = v.expected_dimension;
    merge(out, v);
    return out;
  }

  if (oracle) {
    out.conclusion = oracle_conclusion(*oracle, params);
    out.expected_dimension = oracle->dimension;
    out.provenance.push_back(
        {std::string(kRuleOracle), std::nullopt, std::nullopt,
         "closure dimension " + std::to_string(oracle->dimension) + " (" +
             oracle->identification.label(oracle->size) + ")"});
    return out;
  }
  out.notes.push_back("no criterion applies; run the closure to decide");
  return out;
}

Conclusion oracle_conclusion(const LieClosureResult& oracle,
                             const DerivedParams& params) {
  switch (oracle.identification.kind) {
    case AlgebraId::Kind::u_n:
      return Conclusion::CompletelyControllable;
    case AlgebraId::Kind::su_n:
      return params.trace_zero() ? Conclusion::ControllableUpToPhase
                                 : Conclusion::NotControllable;
    default:
      return Conclusion::NotControllable;
  }
}

bool agrees_with_oracle(const Verdict& verdict, const LieClosureResult& oracle,
                        const DerivedParams& params) {
  if (verdict.conclusion == Conclusion::Undetermined) return true;
  return verdict.conclusion == oracle_conclusion(oracle, params);
}

}  // namespace qcc
