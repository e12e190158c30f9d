#include "qcc/criteria.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qcc {
namespace {

using test::from_spacings;

DerivedParams params_of(const SystemSpec& s) { return derive_params(s); }

GTEST_TEST(ConclusionTest, StringRoundTrip) {
  for (auto c : {Conclusion::CompletelyControllable,
                 Conclusion::ControllableUpToPhase,
                 Conclusion::NotControllable, Conclusion::Undetermined}) {
    EXPECT_EQ(conclusion_from_string(to_string(c)), c);
  }
  EXPECT_THROW(conclusion_from_string("Maybe"), std::invalid_argument);
}

GTEST_TEST(DecomposableTest, Examples) {
  EXPECT_TRUE(check_decomposable(SystemSpec({0, 1, 3, 6}, {1, 0, 1})));
  EXPECT_FALSE(check_decomposable(SystemSpec({0, 1, 3, 6}, {1, 1, 1})));
  const SystemSpec tiny({0, 1, 3, 6}, {1e-15, 1, 1});
  EXPECT_TRUE(check_decomposable(tiny, 1e-9));
  EXPECT_LT(dynamical_algebra(tiny).dimension, 16);

  const Verdict v = full_verdict(tiny, params_of(tiny));
  EXPECT_EQ(v.conclusion, Conclusion::NotControllable);
  ASSERT_EQ(v.provenance.size(), 1u);
  EXPECT_EQ(v.provenance[0].rule, kRuleDecomposable);
  EXPECT_EQ(v.provenance[0].p, 1);
}

GTEST_TEST(Theorem1Test, Examples) {
  const SystemSpec morse = from_spacings({0.9, 0.8, 0.7}, {1, -2, 0.3});
  auto v = check_theorem1(morse, params_of(morse));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::CompletelyControllable);
  EXPECT_EQ(v->expected_dimension, 16);

  const SystemSpec degen({0, 1, 1, 1}, {1, 2, 3});
  v = check_theorem1(degen, params_of(degen));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::CompletelyControllable);
  EXPECT_EQ(v->provenance.front().p, 1);

  const SystemSpec equal = from_spacings({1, 1, 1}, {1, 2, 3});
  EXPECT_FALSE(check_theorem1(equal, params_of(equal)));
}

GTEST_TEST(Theorem1Test, MirroredClauseAndTraceSplit) {
  const SystemSpec s({-2, -1, 0, 3}, {1, 1, 1});  // mu = (1, 1, 3)
  const auto v = check_theorem1(s, params_of(s));
  ASSERT_TRUE(v);
  ASSERT_EQ(v->provenance.size(), 1u);
  EXPECT_EQ(v->provenance[0].p, 3);

  const SystemSpec shifted({-2.25, -1.25, 0.75, 2.75}, {1, 1, 1});  // mu (1,2,2)
  const auto w = check_theorem1(shifted, params_of(shifted));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->conclusion, Conclusion::ControllableUpToPhase);
  EXPECT_EQ(w->expected_dimension, 15);
}

GTEST_TEST(Theorem2Test, Examples) {
  const SystemSpec a({0, 1, 2, 4}, {1, 1, 1});
  auto v = check_theorem2(a, params_of(a));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::CompletelyControllable);
  ASSERT_EQ(v->provenance.size(), 1u);
  EXPECT_EQ(v->provenance[0].p, 3);
  EXPECT_EQ(v->provenance[0].k, 1);

  const SystemSpec b({0, 1, 3, 4}, {1, 2, 1});
  EXPECT_FALSE(check_theorem2(b, params_of(b)));

  const SystemSpec c({0, 1, 3, 4}, {1, 1, 2});
  v = check_theorem2(c, params_of(c));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->provenance[0].p, 2);
  EXPECT_EQ(v->provenance[0].k, 1);
}

GTEST_TEST(Theorem2Test, AutomaticKAwayFromMiddle) {
  // mu_2 isolated at N = 6: k = min(2, 4) = 2 pairs d_0 = 0 with d_4.
  const SystemSpec s = from_spacings({1, 3, 1, 1, 1}, {1, 1, 1, 1, 1});
  const auto v = check_theorem2(s, params_of(s));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->provenance[0].p, 2);
  EXPECT_EQ(v->provenance[0].k, 2);
  EXPECT_EQ(find_asymmetric_k(s, params_of(s), 2), 2);
}

GTEST_TEST(Theorem2Test, MiddleTransitionSearchesK) {
  // p = 3 = N/2 at N = 6; d_2 = d_4 but d_1 != d_5.
  const SystemSpec s = from_spacings({1, 1, 2, 1, 1}, {1, 2, 1, 2, 3});
  const auto v = check_theorem2(s, params_of(s));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->provenance[0].p, 3);
  EXPECT_EQ(v->provenance[0].k, 2);

  const SystemSpec sym = from_spacings({1, 1, 2, 1, 1}, {3, 2, 1, -2, 3});
  EXPECT_FALSE(check_theorem2(sym, params_of(sym)));
}

GTEST_TEST(Theorem2Test, CoupledOscillators) {
  // Two coupled three-level oscillators, sqrt ladder dipoles.
  const SystemSpec s({0, 1, 2, 3.5, 4.5, 5.5},
                     {1, std::sqrt(2.0), 0.7, 1, std::sqrt(2.0)});
  const Verdict v = full_verdict(s, params_of(s));
  EXPECT_EQ(v.conclusion, Conclusion::CompletelyControllable);
  EXPECT_EQ(v.provenance.front().rule, kRuleTheorem2);
  EXPECT_EQ(v.provenance.front().p, 3);
  EXPECT_EQ(dynamical_algebra(s).dimension, 36);
}

GTEST_TEST(Theorem3Test, Examples) {
  const SystemSpec ho({0.5, 1.5, 2.5, 3.5}, {1, std::sqrt(2.0), std::sqrt(3.0)});
  auto v = check_theorem3(ho, params_of(ho));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::CompletelyControllable);
  EXPECT_EQ(v->provenance[0].p, 3);

  const SystemSpec five = from_spacings({1, 1, 1, 1}, {1, 1, 1, 2}, 1.0);
  EXPECT_EQ(derive_params(five).v, (std::vector<double>{1, 0, -3, 7}));
  v = check_theorem3(five, params_of(five));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->provenance[0].p, 1);  // smallest isolated p; p = 4 also fires
  bool saw_p4 = false;
  for (const auto& f : v->provenance) saw_p4 = saw_p4 || f.p == 4;
  EXPECT_TRUE(saw_p4);

  const double r3 = std::sqrt(3.0);
  const SystemSpec flat = from_spacings({1, 1, 1}, {r3, 2, r3});
  EXPECT_FALSE(check_theorem3(flat, params_of(flat)));
}

GTEST_TEST(Theorem3Test, NeedsEqualSpacing) {
  const SystemSpec s = from_spacings({1, 2, 1}, {1, 1, 2});
  EXPECT_FALSE(check_theorem3(s, params_of(s)));
}

GTEST_TEST(Theorem3Test, FullVerdictWithoutOracle) {
  const SystemSpec s({0, 1, 2, 3}, {1, 1, 2});
  const Verdict v = full_verdict(s, params_of(s));
  EXPECT_EQ(v.conclusion, Conclusion::CompletelyControllable);
  EXPECT_EQ(v.provenance.front().rule, kRuleTheorem3);
  // v = (1, -3, 7): every entry is isolated, the headline witness is p = 1.
  EXPECT_EQ(v.provenance.front().p, 1);
  EXPECT_EQ(dynamical_algebra(s).dimension, 16);
}

GTEST_TEST(Theorem4Test, Examples) {
  const SystemSpec n3 = from_spacings({1, 1}, {1, 1});
  auto v = check_theorem4(n3, params_of(n3));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::NotControllable);
  EXPECT_EQ(v->expected_dimension, 4);

  const double r3 = std::sqrt(3.0);
  const SystemSpec n4 = from_spacings({1, 1, 1}, {r3, 2, r3});
  v = check_theorem4(n4, params_of(n4));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->expected_dimension, 4);

  const SystemSpec traceless({-1, 0, 1}, {1, 1});
  v = check_theorem4(traceless, params_of(traceless));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->expected_dimension, 3);
  EXPECT_EQ(dynamical_algebra(traceless).dimension, 3);
}

GTEST_TEST(Theorem4Test, NonzeroSolutionsExistBeyondFour) {
  // d_n^2 = n (N - n) / (N - 1) keeps every v_n equal for any N.
  const int n = 6;
  std::vector<double> d;
  for (int k = 1; k < n; ++k) d.push_back(std::sqrt(k * (n - k) / (n - 1.0)));
  const SystemSpec s = from_spacings(std::vector<double>(n - 1, 1.0), d, 1.0);
  const auto v = check_theorem4(s, params_of(s));
  ASSERT_TRUE(v);
  EXPECT_EQ(dynamical_algebra(s).dimension, 4);
}

GTEST_TEST(Theorem5Test, Examples) {
  const SystemSpec n4 = from_spacings({1, 1, 1}, {1, 1, 1});
  auto v = check_theorem5(n4, params_of(n4));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->conclusion, Conclusion::NotControllable);

  const SystemSpec n5 = from_spacings({1, 1, 1, 1}, {2.5, -2.5, 2.5, 2.5});
  v = check_theorem5(n5, params_of(n5));
  ASSERT_TRUE(v);
  EXPECT_FALSE(v->notes.empty());
  EXPECT_LT(dynamical_algebra(n5).dimension, 25);

  const SystemSpec n2 = from_spacings({1}, {1});
  EXPECT_FALSE(check_theorem5(n2, params_of(n2)));
}

GTEST_TEST(FullyDegenerateTest, Dimensions) {
  const SystemSpec s({2, 2, 2, 2}, {1, 3, 1});
  auto v = check_fully_degenerate(s, params_of(s));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->expected_dimension, 2);
  const SystemSpec zero({0, 0, 0}, {1, 2});
  v = check_fully_degenerate(zero, params_of(zero));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->expected_dimension, 1);
  EXPECT_EQ(dynamical_algebra(zero).dimension, 1);
}

GTEST_TEST(FullVerdictTest, CoupledOscillatorsAtLTwo) {
  // Levels (0, 1, 2.5, 3.5), d = (1, 1, 1): mu_1 = mu_3, d_1 = d_3.
  const SystemSpec s({0, 1, 2.5, 3.5}, {1, 1, 1});
  const Verdict v = full_verdict(s, params_of(s));
  EXPECT_EQ(v.conclusion, Conclusion::NotControllable);
  EXPECT_EQ(v.provenance.front().rule, kRuleClassifier4);
  EXPECT_EQ(v.expected_dimension, 11);
}

GTEST_TEST(FullVerdictTest, OracleDecidesWhenRulesAbstain) {
  // N = 6, mu = (1, 2, 1, 2, 1): no isolated spacing.
  const SystemSpec s = from_spacings({1, 2, 1, 2, 1}, {1, 1, 1, 1, 1});
  const DerivedParams p = params_of(s);
  Verdict v = full_verdict(s, p);
  EXPECT_EQ(v.conclusion, Conclusion::Undetermined);
  EXPECT_TRUE(v.provenance.empty());
  const LieClosureResult oracle = dynamical_algebra(s);
  v = full_verdict(s, p, oracle);
  EXPECT_NE(v.conclusion, Conclusion::Undetermined);
  ASSERT_EQ(v.provenance.size(), 1u);
  EXPECT_EQ(v.provenance[0].rule, kRuleOracle);
  EXPECT_EQ(v.expected_dimension, oracle.dimension);
  EXPECT_TRUE(agrees_with_oracle(v, oracle, p));
}

GTEST_TEST(FullVerdictTest, FragileNotes) {
  const SystemSpec s = from_spacings({1, 1 + 5e-9, 2}, {1, 1, 1});
  const Verdict v = full_verdict(s, params_of(s));
  bool fragile = false;
  for (const auto& n : v.notes) fragile = fragile || n.find("fragile") != std::string::npos;
  EXPECT_TRUE(fragile);
}

GTEST_TEST(FullVerdictTest, PositiveRulesIgnoreDecomposableSpecs) {
  const SystemSpec s = from_spacings({1, 2, 3}, {1, 0, 1});
  const Verdict v = full_verdict(s, params_of(s));
  EXPECT_EQ(v.conclusion, Conclusion::NotControllable);
  for (const auto& f : v.provenance) EXPECT_EQ(f.rule, kRuleDecomposable);
}

GTEST_TEST(OracleConclusionTest, TraceSplit) {
  const SystemSpec s({-1, 0.5, 0.5}, {1, 1});
  const DerivedParams p = params_of(s);
  const LieClosureResult r = dynamical_algebra(s);
  EXPECT_EQ(r.dimension, 8);
  EXPECT_EQ(oracle_conclusion(r, p), Conclusion::ControllableUpToPhase);
}

}  // namespace
}  // namespace qcc
