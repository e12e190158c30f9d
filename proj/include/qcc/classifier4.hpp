#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qcc/criteria.hpp"
#include "qcc/lie_closure.hpp"
#include "qcc/system_model.hpp"

namespace qcc {

enum class FourLevelCaseTag {
  mu_all_distinct,
  mu1_ne_mu2_eq_mu3,
  mu1_eq_mu2_ne_mu3,
  mu1_eq_mu3_ne_mu2_nonzero,
  mu1_eq_mu3_ne_mu2_zero,
  equal_spacing_with_v_subcase,
  fully_degenerate,
};

/// Equality pattern of (v1, v2, v3) for equally spaced four-level systems.
enum class VSubcase {
  all_distinct,
  v1_ne_v2_eq_v3,
  v1_eq_v2_ne_v3,
  v1_eq_v3_ne_v2,
  all_equal,
};

std::string_view to_string(FourLevelCaseTag t);
std::string_view to_string(VSubcase v);

struct ExpectedAlgebra {
  std::string tag;  ///< "u4", "sp2_plus_u1", "u2_like", "abelian_2" (or the
                    ///< traceless variants "su4", "sp2", "su2", "abelian_1")
  int dimension = 0;
};

struct FourLevelCase {
  FourLevelCaseTag tag = FourLevelCaseTag::mu_all_distinct;
  std::optional<VSubcase> v_subcase;
  /// d1 = +-d3, reported where the case depends on it.
  std::optional<bool> d_condition;
  ExpectedAlgebra expected;
  /// Row (1-11) of the four-level controllability table this case lands in.
  int table_row = 0;
};

/// Exhaustive classification of a non-decomposable four-level system.
/// Throws std::domain_error if N != 4 or the spec is decomposable.
std::pair<FourLevelCase, Verdict> classify4(const SystemSpec& spec,
                                            const DerivedParams& params);

/// The ten sp(2) generators h1, h2, x_{2w1}, y_{2w1}, x_{2w2}, y_{2w2},
/// x_{w1+w2}, y_{w1+w2}, x_{w1-w2}, y_{w1-w2} in that order.
std::vector<SkewHermMatrix> sp2_basis();

/// Orthogonal matrix of the relabelling {|1>,|2>,|3>,|4>} ->
/// {|2>,|1>,|3>, sign*|4>}: column a is the old vector that becomes |a>.
/// With sign = -d1/d3 it maps i H1 into sp(2).
Eigen::Matrix4d sp2_relabelling(int sign);

struct TableRow {
  int row = 0;
  std::string system;      ///< "AO" or "HO"
  std::string mu_pattern;  ///< e.g. "mu1 = mu3 != mu2"
  std::string condition;   ///< dipole / v condition, may be empty
  bool controllable = false;
};

/// The eleven rows of the four-level controllability table.
const std::vector<TableRow>& table_rows();

struct TableCheck {
  TableRow row;
  std::string representative;  ///< short description of the sample
  SystemSpec spec;
  FourLevelCase matched;
  Verdict verdict;
  int oracle_dimension = 0;
  std::string oracle_identification;
  bool ok = false;
};

/// Reconstructs the table: classifies and closes one or more representative
/// specs per row and checks row, verdict and algebra against each other.
std::vector<TableCheck> reconstruct_table(const ClosureOptions& options = {},
                                          double eps_param = kDefaultEpsParam);

}  // namespace qcc
