#pragma once

#include <span>
#include <vector>

#include "qcc/skew_herm.hpp"
#include "qcc/tolerance.hpp"

namespace qcc {

/// A dipole-coupled N-level system: H = H0 + f(t) H1 with
/// H0 = sum_n E_n |n><n| and H1 = sum_n d_n (|n><n+1| + |n+1><n|).
///
/// Level indices in this library follow the physics convention and are
/// 1-based wherever they appear in an API (basis elements, witnesses); the
/// storage vectors are 0-based.
class SystemSpec {
 public:
  /// Throws std::invalid_argument unless N >= 2, levels are finite and
  /// non-decreasing, and there are exactly N-1 finite dipoles.
  SystemSpec(std::vector<double> levels, std::vector<double> dipoles);

  int size() const { return static_cast<int>(levels_.size()); }
  std::span<const double> levels() const { return levels_; }
  std::span<const double> dipoles() const { return dipoles_; }

  /// d_n for 0 <= n <= N with the boundary convention d_0 = d_N = 0.
  double dipole(int n) const;

  bool operator==(const SystemSpec&) const = default;

 private:
  std::vector<double> levels_;
  std::vector<double> dipoles_;
};

/// Quantities derived from a SystemSpec that the controllability criteria
/// are phrased in.
struct DerivedParams {
  std::vector<double> mu;  ///< mu_n = E_{n+1} - E_n, n = 1..N-1
  std::vector<double> v;   ///< v_n = 2 d_n^2 - d_{n-1}^2 - d_{n+1}^2
  double trace_h0 = 0.0;
  double eps_param = kDefaultEpsParam;
  bool equally_spaced = false;

  // Reference magnitudes for the relative tolerance of each family.
  double mu_scale = 0.0;      ///< max mu_n
  double dipole_scale = 0.0;  ///< max |d_n|
  double v_scale = 0.0;       ///< max d_n^2
  double trace_scale = 0.0;   ///< sum |E_n|

  ScaledComparator mu_cmp() const { return {eps_param, mu_scale}; }
  ScaledComparator dipole_cmp() const { return {eps_param, dipole_scale}; }
  ScaledComparator v_cmp() const { return {eps_param, v_scale}; }
  bool trace_zero() const {
    return ScaledComparator(eps_param, trace_scale).is_zero(trace_h0);
  }
};

DerivedParams derive_params(const SystemSpec& spec,
                            double eps_param = kDefaultEpsParam);

/// i H0.
SkewHermMatrix build_h0(const SystemSpec& spec);
/// i H1.
SkewHermMatrix build_h1(const SystemSpec& spec);

enum class BasisKind { x, y, h };

/// Standard su(N) basis with 1-based indices:
///   x_{nm} = e_{nm} - e_{mn}, y_{nm} = i (e_{nm} + e_{mn})  (1 <= n < m <= N)
///   h_n = i (e_{nn} - e_{n+1,n+1})                          (1 <= n <= N-1)
/// For h the second index is ignored. Throws std::out_of_range.
SkewHermMatrix basis_element(BasisKind kind, int n, int m, int size);

// Unrestricted variants used when a formula needs x_{31} or i(e_{11}-e_{33}).
SkewHermMatrix x_matrix(int n, int m, int size);
SkewHermMatrix y_matrix(int n, int m, int size);
SkewHermMatrix diag_difference(int n, int m, int size);

}  // namespace qcc
