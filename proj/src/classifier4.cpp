#include "qcc/classifier4.hpp"

#include <cmath>
#include <stdexcept>

namespace qcc {
namespace {

ExpectedAlgebra full_algebra(bool traceless) {
  return traceless ? ExpectedAlgebra{"su4", 15} : ExpectedAlgebra{"u4", 16};
}

ExpectedAlgebra sp2_algebra(bool traceless) {
  return traceless ? ExpectedAlgebra{"sp2", 10}
                   : ExpectedAlgebra{"sp2_plus_u1", 11};
}

Verdict verdict_for(const FourLevelCase& c, bool controllable, bool traceless) {
  Verdict v;
  if (controllable) {
    v.conclusion = traceless ? Conclusion::ControllableUpToPhase
                             : Conclusion::CompletelyControllable;
  } else {
    v.conclusion = Conclusion::NotControllable;
  }
  v.expected_dimension = c.expected.dimension;
  std::string detail = "case " + std::string(to_string(c.tag));
  if (c.v_subcase) detail += " / " + std::string(to_string(*c.v_subcase));
  if (c.d_condition) {
    detail += *c.d_condition ? ", d1 = +-d3" : ", d1 != +-d3";
  }
  detail += " (table row " + std::to_string(c.table_row) + ")";
  v.provenance.push_back(
      {std::string(kRuleClassifier4), std::nullopt, std::nullopt, detail});
  return v;
}

}  // namespace

std::string_view to_string(FourLevelCaseTag t) {
  switch (t) {
    case FourLevelCaseTag::mu_all_distinct: return "mu_all_distinct";
    case FourLevelCaseTag::mu1_ne_mu2_eq_mu3: return "mu1_ne_mu2_eq_mu3";
    case FourLevelCaseTag::mu1_eq_mu2_ne_mu3: return "mu1_eq_mu2_ne_mu3";
    case FourLevelCaseTag::mu1_eq_mu3_ne_mu2_nonzero:
      return "mu1_eq_mu3_ne_mu2_nonzero";
    case FourLevelCaseTag::mu1_eq_mu3_ne_mu2_zero:
      return "mu1_eq_mu3_ne_mu2_zero";
    case FourLevelCaseTag::equal_spacing_with_v_subcase:
      return "equal_spacing_with_v_subcase";
    case FourLevelCaseTag::fully_degenerate: return "fully_degenerate";
  }
  return "";
}

std::string_view to_string(VSubcase v) {
  switch (v) {
    case VSubcase::all_distinct: return "v_all_distinct";
    case VSubcase::v1_ne_v2_eq_v3: return "v1_ne_v2_eq_v3";
    case VSubcase::v1_eq_v2_ne_v3: return "v1_eq_v2_ne_v3";
    case VSubcase::v1_eq_v3_ne_v2: return "v1_eq_v3_ne_v2";
    case VSubcase::all_equal: return "v_all_equal";
  }
  return "";
}

std::pair<FourLevelCase, Verdict> classify4(const SystemSpec& spec,
                                            const DerivedParams& params) {
  if (spec.size() != 4) {
    throw std::domain_error("classify4 needs a four-level system, got N = " +
                            std::to_string(spec.size()));
  }
  if (check_decomposable(spec, params)) {
    throw std::domain_error("classify4 needs all dipoles nonzero");
  }
  const auto mu = params.mu_cmp();
  const auto& m = params.mu;
  const bool e12 = mu.equal(m[0], m[1]);
  const bool e23 = mu.equal(m[1], m[2]);
  const bool e13 = mu.equal(m[0], m[2]);
  const bool traceless = params.trace_zero();
  const bool d13 = params.dipole_cmp().equal(std::abs(spec.dipole(1)),
                                             std::abs(spec.dipole(3)));

  FourLevelCase c;
  bool controllable = true;
  if (e12 && e23 && e13) {
    if (mu.is_zero(m[0])) {
      c.tag = FourLevelCaseTag::fully_degenerate;
      c.table_row = 11;
      const bool h0_zero = traceless;
      c.expected = h0_zero ? ExpectedAlgebra{"abelian_1", 1}
                           : ExpectedAlgebra{"abelian_2", 2};
      controllable = false;
    } else {
      c.tag = FourLevelCaseTag::equal_spacing_with_v_subcase;
      const auto vc = params.v_cmp();
      const auto& v = params.v;
      const bool v12 = vc.equal(v[0], v[1]);
      const bool v23 = vc.equal(v[1], v[2]);
      const bool v13 = vc.equal(v[0], v[2]);
      c.d_condition = d13;
      if (v12 && v23 && v13) {
        c.v_subcase = VSubcase::all_equal;
        c.table_row = 10;
        c.expected = traceless ? ExpectedAlgebra{"su2", 3}
                               : ExpectedAlgebra{"u2_like", 4};
        controllable = false;
      } else if (v13) {
        c.v_subcase = VSubcase::v1_eq_v3_ne_v2;
        c.table_row = 9;
        c.expected = sp2_algebra(traceless);
        controllable = false;
      } else if (v12) {
        c.v_subcase = VSubcase::v1_eq_v2_ne_v3;
        c.table_row = 8;
        c.expected = full_algebra(traceless);
      } else if (v23) {
        c.v_subcase = VSubcase::v1_ne_v2_eq_v3;
        c.table_row = 7;
        c.expected = full_algebra(traceless);
      } else {
        c.v_subcase = VSubcase::all_distinct;
        c.table_row = 6;
        c.expected = full_algebra(traceless);
      }
    }
  } else if (e13) {
    c.tag = mu.is_zero(m[1]) ? FourLevelCaseTag::mu1_eq_mu3_ne_mu2_zero
                             : FourLevelCaseTag::mu1_eq_mu3_ne_mu2_nonzero;
    c.d_condition = d13;
    if (d13) {
      c.table_row = 5;
      c.expected = sp2_algebra(traceless);
      controllable = false;
    } else {
      c.table_row = 4;
      c.expected = full_algebra(traceless);
    }
  } else if (e12) {
    c.tag = FourLevelCaseTag::mu1_eq_mu2_ne_mu3;
    c.table_row = 3;
    c.expected = full_algebra(traceless);
  } else if (e23) {
    c.tag = FourLevelCaseTag::mu1_ne_mu2_eq_mu3;
    c.table_row = 2;
    c.expected = full_algebra(traceless);
  } else {
    c.tag = FourLevelCaseTag::mu_all_distinct;
    c.table_row = 1;
    c.expected = full_algebra(traceless);
  }
  Verdict v = verdict_for(c, controllable, traceless);
  return {c, v};
}

std::vector<SkewHermMatrix> sp2_basis() {
  return {
      diag_difference(1, 3, 4),
      diag_difference(2, 4, 4),
      x_matrix(3, 1, 4),
      y_matrix(3, 1, 4),
      x_matrix(4, 2, 4),
      y_matrix(4, 2, 4),
      x_matrix(3, 2, 4) + x_matrix(4, 1, 4),
      y_matrix(3, 2, 4) + y_matrix(4, 1, 4),
      x_matrix(2, 1, 4) - x_matrix(3, 4, 4),
      y_matrix(2, 1, 4) - y_matrix(3, 4, 4),
  };
}

Eigen::Matrix4d sp2_relabelling(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sp2_relabelling sign must be +1 or -1");
  }
  Eigen::Matrix4d u = Eigen::Matrix4d::Zero();
  u(1, 0) = 1.0;
  u(0, 1) = 1.0;
  u(2, 2) = 1.0;
  u(3, 3) = sign;
  return u;
}

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {1, "AO", "mu1 != mu2 != mu3", "", true},
      {2, "AO", "mu1 != mu2 = mu3", "", true},
      {3, "AO", "mu1 = mu2 != mu3", "", true},
      {4, "AO", "mu1 = mu3 != mu2", "d1 != +-d3", true},
      {5, "AO", "mu1 = mu3 != mu2", "d1 = +-d3", false},
      {6, "HO", "mu1 = mu2 = mu3", "v1 != v2 != v3", true},
      {7, "HO", "mu1 = mu2 = mu3", "v1 != v2 = v3", true},
      {8, "HO", "mu1 = mu2 = mu3", "v1 = v2 != v3", true},
      {9, "HO", "mu1 = mu2 = mu3", "v1 = v3 != v2", false},
      {10, "HO", "mu1 = mu2 = mu3", "v1 = v2 = v3", false},
      {11, "-", "mu1 = mu2 = mu3 = 0", "", false},
  };
  return rows;
}

std::vector<TableCheck> reconstruct_table(const ClosureOptions& options,
                                          double eps_param) {
  struct Sample {
    int row;
    const char* label;
    std::vector<double> levels;
    std::vector<double> dipoles;
  };
  const double r2 = std::sqrt(2.0);
  const double r3 = std::sqrt(3.0);
  const std::vector<Sample> samples = {
      {1, "mu = (1,2,3)", {0, 1, 3, 6}, {1, 1, 1}},
      {1, "mu = (1,2,3), Tr H0 = 0", {-2.5, -1.5, 0.5, 3.5}, {1, 1, 1}},
      {2, "mu = (1,2,2)", {0, 1, 3, 5}, {1, 1, 1}},
      {2, "mu = (0,1,1)", {0, 0, 1, 2}, {1, 1, 1}},
      {3, "mu = (1,1,2)", {0, 1, 2, 4}, {1, 1, 1}},
      {3, "mu = (1,1,0)", {0, 1, 2, 2}, {1, 1, 1}},
      {4, "mu = (1,2,1), d = (1,1,2)", {0, 1, 3, 4}, {1, 1, 2}},
      {4, "mu = (1,0,1), d = (1,1,2)", {0, 1, 1, 2}, {1, 1, 2}},
      {5, "mu = (1,2,1), d = (1,1,1)", {0, 1, 3, 4}, {1, 1, 1}},
      {5, "mu = (1,2,1), d = (1,1,-1)", {0, 1, 3, 4}, {1, 1, -1}},
      {5, "mu = (1,2,1), d = (1.5,0.7,-1.5)", {0, 1, 3, 4}, {1.5, 0.7, -1.5}},
      {5, "mu = (1,0,1), d = (1,1,1)", {0, 1, 1, 2}, {1, 1, 1}},
      {5, "mu = (1,2,1), d = (1,1,1), Tr H0 = 0", {-2, -1, 1, 2}, {1, 1, 1}},
      {6, "d = (1,1,2)", {0, 1, 2, 3}, {1, 1, 2}},
      {7, "d = (sqrt3,sqrt2,1)", {0, 1, 2, 3}, {r3, r2, 1}},
      {7, "d = (1,sqrt2,sqrt(5/3)), v1 = 0", {0, 1, 2, 3},
       {1, r2, std::sqrt(5.0 / 3.0)}},
      {8, "d = (1,sqrt2,sqrt3)", {0, 1, 2, 3}, {1, r2, r3}},
      {8, "d = (sqrt(5/3),sqrt2,1), v3 = 0", {0, 1, 2, 3},
       {std::sqrt(5.0 / 3.0), r2, 1}},
      {9, "d = (1,1,1)", {0, 1, 2, 3}, {1, 1, 1}},
      {9, "d = (2,1,2)", {0, 1, 2, 3}, {2, 1, 2}},
      {9, "d = (1,1,-1)", {0, 1, 2, 3}, {1, 1, -1}},
      {9, "d = (1,1,1), Tr H0 = 0", {-1.5, -0.5, 0.5, 1.5}, {1, 1, 1}},
      {10, "d = (sqrt3,2,sqrt3)", {0, 1, 2, 3}, {r3, 2, r3}},
      {10, "d = (sqrt3,2,sqrt3), Tr H0 = 0", {-1.5, -0.5, 0.5, 1.5},
       {r3, 2, r3}},
      {11, "E = (1,1,1,1)", {1, 1, 1, 1}, {1, 1, 1}},
  };

  std::vector<TableCheck> out;
  for (const auto& s : samples) {
    SystemSpec spec(s.levels, s.dipoles);
    const DerivedParams params = derive_params(spec, eps_param);
    auto [c, verdict] = classify4(spec, params);
    const LieClosureResult oracle = dynamical_algebra(spec, options);
    const TableRow& row = table_rows()[s.row - 1];

    TableCheck check{row, s.label, spec, c, verdict, oracle.dimension,
                     oracle.identification.tag(), false};
    const bool controllable =
        verdict.conclusion == Conclusion::CompletelyControllable ||
        verdict.conclusion == Conclusion::ControllableUpToPhase;
    bool ok = c.table_row == s.row && controllable == row.controllable &&
              agrees_with_oracle(verdict, oracle, params) &&
              oracle.dimension == c.expected.dimension;
    if (c.expected.dimension == 11) {
      ok = ok && oracle.identification.kind == AlgebraId::Kind::sp2_plus_u1;
    }
    check.ok = ok;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace qcc
