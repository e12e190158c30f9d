#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qcc {

/// An N x N skew-Hermitian matrix (A^dagger = -A).
///
/// Every constructor builds the matrix from its upper triangle and the
/// imaginary part of its diagonal, so the structure holds bitwise rather than
/// up to round-off. Arithmetic between two such matrices preserves it.
///
/// Two real coordinate systems of dimension N^2 are provided:
///  - vectorize(): the canonical layout. N imaginary parts of the diagonal,
///    then N(N-1)/2 real parts and N(N-1)/2 imaginary parts of the strictly
///    upper triangle, both in row-major order.
///  - frobenius_coordinates(): the same layout with off-diagonal parts scaled
///    by sqrt(2), so the Euclidean inner product equals Re tr(A^dagger B).
class SkewHermMatrix {
 public:
  SkewHermMatrix() = default;
  /// The zero matrix of the given size.
  explicit SkewHermMatrix(int dim);

  /// Skew-Hermitian part (m - m^dagger) / 2 of an arbitrary square matrix.
  static SkewHermMatrix skew_part(const Eigen::MatrixXcd& m);
  /// Accepts m only if it is skew-Hermitian within tol * max(1, |m|_F).
  /// Throws std::invalid_argument otherwise.
  static SkewHermMatrix from_matrix(const Eigen::MatrixXcd& m,
                                    double tol = 1e-12);
  /// i * h for a real symmetric or complex Hermitian h.
  static SkewHermMatrix times_i(const Eigen::MatrixXcd& hermitian,
                                double tol = 1e-12);
  /// i * I.
  static SkewHermMatrix identity(int dim);

  static SkewHermMatrix devectorize(int dim, const Eigen::VectorXd& v);
  static SkewHermMatrix from_frobenius_coordinates(int dim,
                                                   const Eigen::VectorXd& c);

  Eigen::VectorXd vectorize() const;
  Eigen::VectorXd frobenius_coordinates() const;

  int dim() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }
  std::complex<double> operator()(int r, int c) const { return m_(r, c); }

  double norm() const { return m_.norm(); }
  std::complex<double> trace() const { return m_.trace(); }
  bool is_zero() const { return m_.isZero(0.0); }

  SkewHermMatrix& operator+=(const SkewHermMatrix& o);
  SkewHermMatrix& operator-=(const SkewHermMatrix& o);
  SkewHermMatrix& operator*=(double s);

  friend SkewHermMatrix operator+(SkewHermMatrix a, const SkewHermMatrix& b) {
    return a += b;
  }
  friend SkewHermMatrix operator-(SkewHermMatrix a, const SkewHermMatrix& b) {
    return a -= b;
  }
  friend SkewHermMatrix operator*(SkewHermMatrix a, double s) { return a *= s; }
  friend SkewHermMatrix operator*(double s, SkewHermMatrix a) { return a *= s; }
  friend SkewHermMatrix operator-(SkewHermMatrix a) { return a *= -1.0; }

  /// Frobenius inner product Re tr(a^dagger b).
  friend double inner(const SkewHermMatrix& a, const SkewHermMatrix& b);

  bool operator==(const SkewHermMatrix& o) const {
    return dim() == o.dim() && m_ == o.m_;
  }

 private:
  explicit SkewHermMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {}

  Eigen::MatrixXcd m_;
};

}  // namespace qcc
