#include "qcc/model_zoo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"

namespace qcc {
namespace {

SystemSpec make(ModelKind kind, int size) {
  ModelParams p;
  p.model = kind;
  p.size = size;
  return make_model(p);
}

GTEST_TEST(ModelZooTest, Names) {
  for (auto k : {ModelKind::morse, ModelKind::box, ModelKind::atom,
                 ModelKind::truncated_harmonic, ModelKind::coupled_oscillators,
                 ModelKind::degenerate_upper, ModelKind::alternating_odd}) {
    EXPECT_EQ(model_from_string(to_string(k)), k);
  }
  EXPECT_THROW(model_from_string("rotor"), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, Atom) {
  ModelParams p;
  p.model = ModelKind::atom;
  p.size = 3;
  p.z = 1;
  const SystemSpec s = make_model(p);
  EXPECT_DOUBLE_EQ(s.levels()[0], -13.9);
  EXPECT_DOUBLE_EQ(s.levels()[1], -3.475);
  EXPECT_NEAR(s.levels()[2], -1.5444444444444, 1e-12);
  p.z = 0.5;
  EXPECT_THROW(make_model(p), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, Box) {
  const SystemSpec s = make(ModelKind::box, 4);
  EXPECT_EQ(std::vector<double>(s.levels().begin(), s.levels().end()),
            (std::vector<double>{1, 4, 9, 16}));
  EXPECT_EQ(derive_params(s).mu, (std::vector<double>{3, 5, 7}));
  ModelParams p;
  p.model = ModelKind::box;
  p.c = 0;
  EXPECT_THROW(make_model(p), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, TruncatedHarmonic) {
  const SystemSpec s = make(ModelKind::truncated_harmonic, 4);
  EXPECT_DOUBLE_EQ(s.dipoles()[1], std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(s.levels()[0], 1.5);
  const DerivedParams d = derive_params(s);
  EXPECT_NEAR(d.v[0], 0, 1e-14);
  EXPECT_NEAR(d.v[1], 0, 1e-14);
  EXPECT_NEAR(d.v[2], 4, 1e-14);
}

GTEST_TEST(ModelZooTest, CoupledOscillators) {
  ModelParams p;
  p.model = ModelKind::coupled_oscillators;
  p.size = 2;
  p.delta = 0.5;
  p.variant = DipoleVariant::uniform;
  const SystemSpec s = make_model(p);
  EXPECT_EQ(std::vector<double>(s.levels().begin(), s.levels().end()),
            (std::vector<double>{0, 1, 2.5, 3.5}));
  EXPECT_EQ(std::vector<double>(s.dipoles().begin(), s.dipoles().end()),
            (std::vector<double>{1, 1, 1}));

  p.size = 3;
  p.variant = DipoleVariant::sqrt_ladder;
  p.coupling = 0.8;
  const SystemSpec ladder = make_model(p);
  EXPECT_DOUBLE_EQ(ladder.dipoles()[1], std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(ladder.dipoles()[2], 0.8);
  EXPECT_DOUBLE_EQ(ladder.dipoles()[3], 1.0);

  p.delta = 0;
  EXPECT_THROW(make_model(p), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, MorseRange) {
  ModelParams p;
  p.model = ModelKind::morse;
  p.size = 4;
  p.b = 0.5;
  EXPECT_THROW(make_model(p), std::invalid_argument);
  p.b = 0.1;
  const DerivedParams d = derive_params(make_model(p));
  EXPECT_NEAR(d.mu[0], 0.9, 1e-15);
  EXPECT_NEAR(d.mu[2], 0.7, 1e-15);
  p.dipoles = {1, 2};
  EXPECT_THROW(make_model(p), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, AlternatingOdd) {
  ModelParams p;
  p.model = ModelKind::alternating_odd;
  p.size = 3;
  const SystemSpec s = make_model(p);
  ASSERT_EQ(s.size(), 7);
  const DerivedParams d = derive_params(s);
  EXPECT_DOUBLE_EQ(d.mu[1], d.mu[3]);
  EXPECT_DOUBLE_EQ(d.mu[1], d.mu[5]);
  p.odd_spacings = {2.0, 2.5};
  EXPECT_THROW(make_model(p), std::invalid_argument);
}

GTEST_TEST(ModelZooTest, ExpectedVerdicts) {
  struct Case {
    ModelKind kind;
    int size;
    std::string_view rule;
  };
  for (const Case& c : {Case{ModelKind::morse, 5, kRuleTheorem1},
                        Case{ModelKind::box, 5, kRuleTheorem1},
                        Case{ModelKind::atom, 5, kRuleTheorem1},
                        Case{ModelKind::degenerate_upper, 5, kRuleTheorem1},
                        Case{ModelKind::alternating_odd, 2, kRuleTheorem1},
                        Case{ModelKind::truncated_harmonic, 5, kRuleTheorem3},
                        Case{ModelKind::coupled_oscillators, 3, kRuleTheorem2}}) {
    const SystemSpec s = make(c.kind, c.size);
    const Verdict v = full_verdict(s, derive_params(s));
    EXPECT_EQ(v.conclusion, Conclusion::CompletelyControllable) << to_string(c.kind);
    EXPECT_EQ(v.provenance.front().rule, c.rule) << to_string(c.kind);
    EXPECT_EQ(dynamical_algebra(s).dimension, s.size() * s.size());
  }

  ModelParams p;
  p.model = ModelKind::coupled_oscillators;
  p.size = 2;
  p.variant = DipoleVariant::uniform;
  const SystemSpec s = make_model(p);
  const Verdict v = full_verdict(s, derive_params(s));
  EXPECT_EQ(v.conclusion, Conclusion::NotControllable);
  EXPECT_EQ(v.provenance.front().rule, kRuleClassifier4);
  EXPECT_EQ(dynamical_algebra(s).dimension, 11);
}

GTEST_TEST(Theorem4FamilyTest, SmallCases) {
  auto s = theorem4_family(3, 1.0);
  ASSERT_TRUE(s);
  EXPECT_NEAR(s->dipoles()[0], 1.0, 1e-15);
  EXPECT_NEAR(s->dipoles()[1], 1.0, 1e-15);

  s = theorem4_family(4, std::sqrt(3.0));
  ASSERT_TRUE(s);
  EXPECT_NEAR(s->dipoles()[0], std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(s->dipoles()[1], 2.0, 1e-14);
  EXPECT_NEAR(s->dipoles()[2], std::sqrt(3.0), 1e-14);

  EXPECT_FALSE(theorem4_family(2, 1.0));
  EXPECT_FALSE(theorem4_family(5, 0.0));
}

GTEST_TEST(Theorem4FamilyTest, AllVEqualAndDimensionFour) {
  for (int n = 3; n <= 9; ++n) {
    const auto s = theorem4_family(n, 1.0);
    ASSERT_TRUE(s) << n;
    const DerivedParams d = derive_params(*s);
    for (double v : d.v) EXPECT_NEAR(v, 2.0 / (n - 1), 1e-12) << n;
    const Verdict verdict = full_verdict(*s, d);
    EXPECT_EQ(verdict.conclusion, Conclusion::NotControllable);
    EXPECT_EQ(verdict.provenance.front().rule, kRuleTheorem4);
    EXPECT_EQ(dynamical_algebra(*s).dimension, 4) << n;
  }
}

}  // namespace
}  // namespace qcc
