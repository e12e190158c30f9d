#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcc/lie_closure.hpp"
#include "qcc/system_model.hpp"

namespace qcc {

enum class Conclusion {
  CompletelyControllable,
  /// su(N) is reached and Tr(H0) = 0, so only the global phase is missing.
  ControllableUpToPhase,
  NotControllable,
  Undetermined,
};

std::string_view to_string(Conclusion c);
/// Inverse of to_string; throws std::invalid_argument.
Conclusion conclusion_from_string(std::string_view s);

/// One rule that fired, with the indices that witness it (1-based).
struct RuleFiring {
  std::string rule;
  std::optional<int> p;
  std::optional<int> k;
  std::string detail;
};

struct Verdict {
  Conclusion conclusion = Conclusion::Undetermined;
  /// Fired rules in evaluation order; the first one decided the conclusion.
  std::vector<RuleFiring> provenance;
  std::vector<std::string> notes;
  /// Dimension of the dynamical Lie algebra implied by the deciding rule,
  /// when the rule pins it down.
  std::optional<int> expected_dimension;
};

// Rule tags as they appear in provenance.
inline constexpr std::string_view kRuleDecomposable = "decomposable";
inline constexpr std::string_view kRuleTheorem1 = "theorem1";
inline constexpr std::string_view kRuleTheorem2 = "theorem2";
inline constexpr std::string_view kRuleTheorem3 = "theorem3";
inline constexpr std::string_view kRuleTheorem4 = "theorem4";
inline constexpr std::string_view kRuleTheorem5 = "theorem5";
inline constexpr std::string_view kRuleFullyDegenerate = "fully_degenerate";
inline constexpr std::string_view kRuleClassifier4 = "classifier4";
inline constexpr std::string_view kRuleOracle = "oracle";

/// Some d_n vanishes (relative to the largest |d|): the chain splits into
/// independent blocks.
bool check_decomposable(const SystemSpec& spec, const DerivedParams& params);
bool check_decomposable(const SystemSpec& spec,
                        double eps_param = kDefaultEpsParam);

// Positive criteria. Each assumes a non-decomposable spec and returns a
// CompletelyControllable verdict (ControllableUpToPhase when Tr(H0) = 0) or
// nothing.
std::optional<Verdict> check_theorem1(const SystemSpec& spec,
                                      const DerivedParams& params);
std::optional<Verdict> check_theorem2(const SystemSpec& spec,
                                      const DerivedParams& params);
std::optional<Verdict> check_theorem3(const SystemSpec& spec,
                                      const DerivedParams& params);

// Negative criteria.
std::optional<Verdict> check_theorem4(const SystemSpec& spec,
                                      const DerivedParams& params);
std::optional<Verdict> check_theorem5(const SystemSpec& spec,
                                      const DerivedParams& params);
/// All levels coincide: the algebra is spanned by i H0 (a multiple of i I)
/// and i H1.
std::optional<Verdict> check_fully_degenerate(const SystemSpec& spec,
                                              const DerivedParams& params);

/// Smallest k >= 1 with |d_{p-k}| != |d_{p+k}| (d_0 = d_N = 0), if any.
std::optional<int> find_asymmetric_k(const SystemSpec& spec,
                                     const DerivedParams& params, int p);

/// Runs decomposability, theorems 1-3, theorems 4-5, the fully degenerate
/// rule and (N = 4) the four-level classifier. If every rule abstains and an
/// oracle result is supplied, the oracle decides.
Verdict full_verdict(const SystemSpec& spec, const DerivedParams& params,
                     const std::optional<LieClosureResult>& oracle = {});

/// Conclusion implied by a closure: u(N) -> CompletelyControllable, su(N)
/// with zero trace -> ControllableUpToPhase, anything else NotControllable.
Conclusion oracle_conclusion(const LieClosureResult& oracle,
                             const DerivedParams& params);

/// False when a definite rule verdict contradicts the closure. Undetermined
/// verdicts always agree.
bool agrees_with_oracle(const Verdict& verdict, const LieClosureResult& oracle,
                        const DerivedParams& params);

}  // namespace qcc
