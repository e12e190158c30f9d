#include "qcc/skew_herm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qcc {
namespace {

using cd = std::complex<double>;

// Mirror the upper triangle and keep only the imaginary part of the diagonal.
void enforce_structure(Eigen::MatrixXcd& m) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index r = 0; r < n; ++r) {
    m(r, r) = cd(0.0, m(r, r).imag());
    for (Eigen::Index c = r + 1; c < n; ++c) m(c, r) = -std::conj(m(r, c));
  }
}

void require_square(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("skew-Hermitian matrix must be square, got " +
                                std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()));
  }
}

void require_length(int dim, const Eigen::VectorXd& v) {
  if (dim < 0 || v.size() != static_cast<Eigen::Index>(dim) * dim) {
    throw std::invalid_argument("coordinate vector of length " +
                                std::to_string(v.size()) +
                                " does not match dimension " +
                                std::to_string(dim));
  }
}

}  // namespace

SkewHermMatrix::SkewHermMatrix(int dim)
    : m_(Eigen::MatrixXcd::Zero(dim, dim)) {
  if (dim < 0) throw std::invalid_argument("negative matrix dimension");
}

SkewHermMatrix SkewHermMatrix::skew_part(const Eigen::MatrixXcd& m) {
  require_square(m);
  Eigen::MatrixXcd s = 0.5 * (m - m.adjoint());
  enforce_structure(s);
  return SkewHermMatrix(std::move(s));
}

SkewHermMatrix SkewHermMatrix::from_matrix(const Eigen::MatrixXcd& m,
                                           double tol) {
  require_square(m);
  const double defect = (m + m.adjoint()).norm();
  if (defect > tol * std::max(1.0, m.norm())) {
    throw std::invalid_argument("matrix is not skew-Hermitian (defect " +
                                std::to_string(defect) + ")");
  }
  Eigen::MatrixXcd s = m;
  enforce_structure(s);
  return SkewHermMatrix(std::move(s));
}

SkewHermMatrix SkewHermMatrix::times_i(const Eigen::MatrixXcd& hermitian,
                                       double tol) {
  return from_matrix(cd(0.0, 1.0) * hermitian, tol);
}

SkewHermMatrix SkewHermMatrix::identity(int dim) {
  SkewHermMatrix out(dim);
  for (int i = 0; i < dim; ++i) out.m_(i, i) = cd(0.0, 1.0);
  return out;
}

SkewHermMatrix SkewHermMatrix::devectorize(int dim, const Eigen::VectorXd& v) {
  require_length(dim, v);
  SkewHermMatrix out(dim);
  const Eigen::Index pairs = static_cast<Eigen::Index>(dim) * (dim - 1) / 2;
  Eigen::Index k = 0;
  for (int r = 0; r < dim; ++r) out.m_(r, r) = cd(0.0, v(r));
  for (int r = 0; r < dim; ++r) {
    for (int c = r + 1; c < dim; ++c, ++k) {
      out.m_(r, c) = cd(v(dim + k), v(dim + pairs + k));
    }
  }
  enforce_structure(out.m_);
  return out;
}

SkewHermMatrix SkewHermMatrix::from_frobenius_coordinates(
    int dim, const Eigen::VectorXd& c) {
  require_length(dim, c);
  Eigen::VectorXd v = c;
  v.tail(v.size() - dim) /= std::sqrt(2.0);
  return devectorize(dim, v);
}

Eigen::VectorXd SkewHermMatrix::vectorize() const {
  const int n = dim();
  const Eigen::Index pairs = static_cast<Eigen::Index>(n) * (n - 1) / 2;
  Eigen::VectorXd v(static_cast<Eigen::Index>(n) * n);
  Eigen::Index k = 0;
  for (int r = 0; r < n; ++r) v(r) = m_(r, r).imag();
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c, ++k) {
      v(n + k) = m_(r, c).real();
      v(n + pairs + k) = m_(r, c).imag();
    }
  }
  return v;
}

Eigen::VectorXd SkewHermMatrix::frobenius_coordinates() const {
  Eigen::VectorXd v = vectorize();
  v.tail(v.size() - dim()) *= std::sqrt(2.0);
  return v;
}

SkewHermMatrix& SkewHermMatrix::operator+=(const SkewHermMatrix& o) {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  m_ += o.m_;
  return *this;
}

SkewHermMatrix& SkewHermMatrix::operator-=(const SkewHermMatrix& o) {
  if (dim() != o.dim()) throw std::invalid_argument("dimension mismatch");
  m_ -= o.m_;
  return *this;
}

SkewHermMatrix& SkewHermMatrix::operator*=(double s) {
  m_ *= s;
  return *this;
}

double inner(const SkewHermMatrix& a, const SkewHermMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return a.m_.conjugate().cwiseProduct(b.m_).sum().real();
}

}  // namespace qcc
