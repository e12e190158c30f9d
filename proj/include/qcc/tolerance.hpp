#pragma once

#include <cmath>

namespace qcc {

inline constexpr double kDefaultEpsParam = 1e-9;
inline constexpr double kDefaultEpsRank = 1e-8;

/// Equality test for a family of scalars that share a characteristic scale.
///
/// Two values are equal when |a - b| <= eps * scale. The scale is the
/// magnitude of the family (largest spacing, largest dipole, ...), so a value
/// that is tiny compared to its siblings compares equal to zero.
class ScaledComparator {
 public:
  ScaledComparator(double eps, double scale) : eps_(eps), scale_(scale) {}

  bool equal(double a, double b) const {
    return std::abs(a - b) <= eps_ * scale_;
  }
  bool is_zero(double a) const { return equal(a, 0.0); }

  /// Distinct under the tolerance, but within ten tolerances of each other.
  bool fragile(double a, double b) const {
    const double gap = std::abs(a - b);
    return gap > eps_ * scale_ && gap <= 10.0 * eps_ * scale_;
  }

  double eps() const { return eps_; }
  double scale() const { return scale_; }

 private:
  double eps_;
  double scale_;
};

}  // namespace qcc
