#include "qcc/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qcc {
namespace {

using cd = std::complex<double>;

void check_index(int n, int size, const char* what) {
  if (n < 1 || n > size) {
    throw std::out_of_range(std::string(what) + " index " + std::to_string(n) +
                            " outside 1.." + std::to_string(size));
  }
}

}  // namespace

SystemSpec::SystemSpec(std::vector<double> levels, std::vector<double> dipoles)
    : levels_(std::move(levels)), dipoles_(std::move(dipoles)) {
  const auto n = levels_.size();
  if (n < 2) {
    throw std::invalid_argument("a system needs at least 2 levels, got " +
                                std::to_string(n));
  }
  if (dipoles_.size() != n - 1) {
    throw std::invalid_argument("expected " + std::to_string(n - 1) +
                                " dipoles for " + std::to_string(n) +
                                " levels, got " +
                                std::to_string(dipoles_.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(levels_[i])) {
      throw std::invalid_argument("level " + std::to_string(i + 1) +
                                  " is not finite");
    }
    if (i > 0 && levels_[i] < levels_[i - 1]) {
      throw std::invalid_argument(
          "levels must be non-decreasing; E_" + std::to_string(i + 1) +
          " < E_" + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < dipoles_.size(); ++i) {
    if (!std::isfinite(dipoles_[i])) {
      throw std::invalid_argument("dipole " + std::to_string(i + 1) +
                                  " is not finite");
    }
  }
}

double SystemSpec::dipole(int n) const {
  if (n < 0 || n > size()) {
    throw std::out_of_range("dipole index " + std::to_string(n));
  }
  if (n == 0 || n == size()) return 0.0;
  return dipoles_[n - 1];
}

DerivedParams derive_params(const SystemSpec& spec, double eps_param) {
  if (!(eps_param > 0.0)) {
    throw std::invalid_argument("eps_param must be positive");
  }
  const int n_levels = spec.size();
  const auto levels = spec.levels();
  DerivedParams p;
  p.eps_param = eps_param;
  p.mu.resize(n_levels - 1);
  p.v.resize(n_levels - 1);
  for (int n = 1; n < n_levels; ++n) {
    p.mu[n - 1] = levels[n] - levels[n - 1];
    const double d = spec.dipole(n);
    const double below = spec.dipole(n - 1);
    const double above = spec.dipole(n + 1);
    p.v[n - 1] = 2.0 * d * d - below * below - above * above;
  }
  for (double e : levels) {
    p.trace_h0 += e;
    p.trace_scale += std::abs(e);
  }
  p.mu_scale = *std::max_element(p.mu.begin(), p.mu.end());
  for (double d : spec.dipoles()) {
    p.dipole_scale = std::max(p.dipole_scale, std::abs(d));
  }
  p.v_scale = p.dipole_scale * p.dipole_scale;
  const auto cmp = p.mu_cmp();
  p.equally_spaced = std::all_of(p.mu.begin(), p.mu.end(),
                                 [&](double m) { return cmp.equal(m, p.mu[0]); });
  return p;
}

SkewHermMatrix build_h0(const SystemSpec& spec) {
  const int n = spec.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) h(i, i) = spec.levels()[i];
  return SkewHermMatrix::times_i(h);
}

SkewHermMatrix build_h1(const SystemSpec& spec) {
  const int n = spec.size();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    h(i, i + 1) = h(i + 1, i) = spec.dipoles()[i];
  }
  return SkewHermMatrix::times_i(h);
}

SkewHermMatrix x_matrix(int n, int m, int size) {
  check_index(n, size, "row");
  check_index(m, size, "column");
  if (n == m) throw std::out_of_range("x_{nm} needs n != m");
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(size, size);
  e(n - 1, m - 1) = 1.0;
  e(m - 1, n - 1) = -1.0;
  return SkewHermMatrix::from_matrix(e);
}

SkewHermMatrix y_matrix(int n, int m, int size) {
  check_index(n, size, "row");
  check_index(m, size, "column");
  if (n == m) throw std::out_of_range("y_{nm} needs n != m");
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(size, size);
  e(n - 1, m - 1) = cd(0.0, 1.0);
  e(m - 1, n - 1) = cd(0.0, 1.0);
  return SkewHermMatrix::from_matrix(e);
}

SkewHermMatrix diag_difference(int n, int m, int size) {
  check_index(n, size, "row");
  check_index(m, size, "column");
  if (n == m) throw std::out_of_range("diagonal difference needs n != m");
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(size, size);
  e(n - 1, n - 1) = cd(0.0, 1.0);
  e(m - 1, m - 1) = cd(0.0, -1.0);
  return SkewHermMatrix::from_matrix(e);
}

SkewHermMatrix basis_element(BasisKind kind, int n, int m, int size) {
  if (size < 2) throw std::out_of_range("basis elements need N >= 2");
  switch (kind) {
    case BasisKind::x:
    case BasisKind::y:
      if (!(1 <= n && n < m && m <= size)) {
        throw std::out_of_range("need 1 <= n < m <= N, got n=" +
                                std::to_string(n) + " m=" + std::to_string(m) +
                                " N=" + std::to_string(size));
      }
      return kind == BasisKind::x ? x_matrix(n, m, size)
                                  : y_matrix(n, m, size);
    case BasisKind::h:
      if (!(1 <= n && n <= size - 1)) {
        throw std::out_of_range("need 1 <= n <= N-1 for h_n, got n=" +
                                std::to_string(n));
      }
      return diag_difference(n, n + 1, size);
  }
  throw std::out_of_range("unknown basis kind");
}

}  // namespace qcc
