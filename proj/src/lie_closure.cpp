#include "qcc/lie_closure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "qcc/classifier4.hpp"

namespace qcc {
namespace {

constexpr double kUnitRoundoff = std::numeric_limits<double>::epsilon();

// Round-off committed when forming the commutator of two unit matrices.
double commutator_roundoff(int size) { return 4.0 * size * kUnitRoundoff; }

// Orthonormal columns in Frobenius coordinates, each with a forward-error
// bound, plus the matching matrices for commutator evaluation.
class SpanBuilder {
 public:
  SpanBuilder(int size, int capacity)
      : size_(size),
        q_(static_cast<Eigen::Index>(size) * size, capacity),
        errors_(capacity) {}

  int count() const { return count_; }
  int size() const { return size_; }
  const std::vector<SkewHermMatrix>& matrices() const { return matrices_; }
  const std::vector<double>& error_list() const { return error_list_; }

  auto columns() const { return q_.leftCols(count_); }
  auto errors() const { return errors_.head(count_); }

  // Projects every column of `cand` off the span (two passes) and folds the
  // error carried by the basis into `err`.
  void project(Eigen::MatrixXd& cand, Eigen::VectorXd& err) const {
    if (count_ == 0) return;
    for (int pass = 0; pass < 2; ++pass) {
      const Eigen::MatrixXd coef = columns().transpose() * cand;
      cand.noalias() -= columns() * coef;
      const Eigen::VectorXd carried =
          (coef.array().colwise() * errors().array())
              .matrix()
              .colwise()
              .norm()
              .transpose();
      err = (err.cwiseProduct(err) + carried.cwiseProduct(carried)).cwiseSqrt();
    }
  }

  void append(const Eigen::VectorXd& unit, double error) {
    q_.col(count_) = unit;
    errors_(count_) = error;
    ++count_;
    matrices_.push_back(SkewHermMatrix::from_frobenius_coordinates(size_, unit));
    error_list_.push_back(error);
  }

 private:
  int size_;
  int count_ = 0;
  Eigen::MatrixXd q_;
  Eigen::VectorXd errors_;
  std::vector<SkewHermMatrix> matrices_;
  std::vector<double> error_list_;
};

struct AbsorbStats {
  std::vector<int> added;
  int fragile = 0;
};

// Greedy pivoted Gram-Schmidt of a batch of candidates into the span.
AbsorbStats absorb(SpanBuilder& span, Eigen::MatrixXd cand, Eigen::VectorXd err,
                   const ClosureOptions& opt, int max_dim) {
  AbsorbStats stats;
  span.project(cand, err);
  std::vector<bool> alive(cand.cols(), true);
  while (span.count() < max_dim) {
    const Eigen::VectorXd norms = cand.colwise().norm().transpose();
    Eigen::Index best = -1;
    for (Eigen::Index j = 0; j < cand.cols(); ++j) {
      if (alive[j] && (best < 0 || norms(j) > norms(best))) best = j;
    }
    if (best < 0 || norms(best) <= opt.eps_rank) break;
    alive[best] = false;
    if (opt.reject_fragile && norms(best) <= opt.error_margin * err(best)) {
      ++stats.fragile;
      continue;
    }

    Eigen::MatrixXd r = cand.col(best);
    Eigen::VectorXd r_err(1);
    r_err(0) = err(best);
    span.project(r, r_err);
    const double rho = r.norm();
    if (rho <= opt.eps_rank) continue;
    if (rho <= opt.error_margin * r_err(0)) {
      ++stats.fragile;
      if (opt.reject_fragile) continue;
    }
    const Eigen::VectorXd unit = r.col(0) / rho;
    const double unit_err = r_err(0) / rho + kUnitRoundoff;
    span.append(unit, unit_err);
    stats.added.push_back(span.count() - 1);

    const Eigen::RowVectorXd coef = unit.transpose() * cand;
    cand.noalias() -= unit * coef;
    for (Eigen::Index j = 0; j < cand.cols(); ++j) {
      err(j) = std::hypot(err(j), coef(j) * unit_err);
    }
  }
  return stats;
}

// Frequency blocks of ad_D for a diagonal generator D = i diag(lambda).
// Coordinate k of the Frobenius layout belongs to block block_of[k]; the
// diagonal and every pair (n, m) with |lambda_n - lambda_m| in the same
// cluster share a block. Nearby frequencies are merged (single linkage), which
// only coarsens the decomposition and is therefore always safe.
struct Grading {
  std::vector<int> block_of;
  int blocks = 1;
};

std::optional<Grading> find_grading(std::span<const SkewHermMatrix> gens,
                                    double tol) {
  const SkewHermMatrix* diag = nullptr;
  for (const auto& g : gens) {
    const auto& m = g.matrix();
    bool is_diag = !g.is_zero();
    for (int r = 0; r < m.rows() && is_diag; ++r) {
      for (int c = 0; c < m.cols() && is_diag; ++c) {
        if (r != c && m(r, c) != 0.0) is_diag = false;
      }
    }
    if (is_diag) {
      diag = &g;
      break;
    }
  }
  if (!diag) return std::nullopt;

  const int n = diag->dim();
  std::vector<double> omega;  // indexed like the upper-triangle pairs
  double scale = 0.0;
  for (int r = 0; r < n; ++r) {
    for (int c = r + 1; c < n; ++c) {
      omega.push_back(std::abs(diag->matrix()(r, r).imag() -
                               diag->matrix()(c, c).imag()));
      scale = std::max(scale, omega.back());
    }
  }
  std::vector<double> sorted = omega;
  sorted.push_back(0.0);
  std::sort(sorted.begin(), sorted.end());
  // Cluster representatives: index of the cluster each sorted value opens.
  std::vector<double> starts{sorted.front()};
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > tol * scale) starts.push_back(sorted[i]);
  }
  auto cluster = [&](double w) {
    return static_cast<int>(std::upper_bound(starts.begin(), starts.end(), w) -
                            starts.begin()) - 1;
  };

  Grading g;
  g.blocks = static_cast<int>(starts.size());
  const int pairs = n * (n - 1) / 2;
  g.block_of.assign(n * n, 0);
  for (int k = 0; k < pairs; ++k) {
    const int b = cluster(omega[k]);
    g.block_of[n + k] = b;
    g.block_of[n + pairs + k] = b;
  }
  return g;
}

// Replaces every candidate by its nonzero block components. Masking is exact,
// so each component inherits the error bound of its parent.
void split(const Grading& g, Eigen::MatrixXd& cand, Eigen::VectorXd& err) {
  if (g.blocks <= 1) return;
  std::vector<Eigen::VectorXd> cols;
  std::vector<double> errs;
  std::vector<Eigen::VectorXd> parts(g.blocks);
  std::vector<bool> used(g.blocks);
  for (Eigen::Index j = 0; j < cand.cols(); ++j) {
    std::fill(used.begin(), used.end(), false);
    for (Eigen::Index k = 0; k < cand.rows(); ++k) {
      const double x = cand(k, j);
      if (x == 0.0) continue;
      const int b = g.block_of[k];
      if (!used[b]) {
        parts[b] = Eigen::VectorXd::Zero(cand.rows());
        used[b] = true;
      }
      parts[b](k) = x;
    }
    for (int b = 0; b < g.blocks; ++b) {
      if (!used[b]) continue;
      cols.push_back(std::move(parts[b]));
      errs.push_back(err(j));
    }
  }
  cand.resize(cand.rows(), static_cast<Eigen::Index>(cols.size()));
  err.resize(static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    cand.col(j) = cols[j];
    err(j) = errs[j];
  }
}

void check_same_size(std::span<const SkewHermMatrix> ms, int size) {
  for (const auto& m : ms) {
    if (m.dim() != size) {
      throw std::invalid_argument("generators of different sizes: " +
                                  std::to_string(m.dim()) + " vs " +
                                  std::to_string(size));
    }
  }
}

// Projects one matrix off an orthonormal list; returns the residual norm.
double residual_norm(std::span<const SkewHermMatrix> basis,
                     const SkewHermMatrix& m) {
  Eigen::VectorXd r = m.frobenius_coordinates();
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& b : basis) {
      const Eigen::VectorXd q = b.frobenius_coordinates();
      r -= q.dot(r) * q;
    }
  }
  return r.norm();
}

}  // namespace

SkewHermMatrix commutator(const SkewHermMatrix& a, const SkewHermMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("commutator of " + std::to_string(a.dim()) +
                                "x" + std::to_string(a.dim()) + " and " +
                                std::to_string(b.dim()) + "x" +
                                std::to_string(b.dim()) + " matrices");
  }
  const Eigen::MatrixXcd ab = a.matrix() * b.matrix();
  const Eigen::MatrixXcd ba = b.matrix() * a.matrix();
  return SkewHermMatrix::skew_part(ab - ba);
}

std::string AlgebraId::tag() const {
  switch (kind) {
    case Kind::u_n: return "u_n";
    case Kind::su_n: return "su_n";
    case Kind::u2_like: return "u2_like";
    case Kind::sp2_plus_u1: return "sp2_plus_u1";
    case Kind::other: return "other";
  }
  return "other";
}

std::string AlgebraId::label(int size) const {
  const std::string n = std::to_string(size);
  switch (kind) {
    case Kind::u_n: return "u(" + n + ")";
    case Kind::su_n: return "su(" + n + ")";
    case Kind::u2_like: return "u(2)-like";
    case Kind::sp2_plus_u1: return "sp(2)+u(1)";
    case Kind::other: break;
  }
  return "other(" + std::to_string(dimension) + ")";
}

double LieClosureResult::max_error_bound() const {
  double m = 0.0;
  for (double e : error_bounds) m = std::max(m, e);
  return m;
}

double LieClosureResult::membership_tolerance() const {
  return std::max(eps_rank, error_margin * max_error_bound());
}

LieClosureResult closure(std::span<const SkewHermMatrix> generators,
                         const ClosureOptions& options) {
  if (generators.empty()) {
    throw std::invalid_argument("closure needs at least one generator");
  }
  if (!(options.eps_rank > 0.0)) {
    throw std::invalid_argument("eps_rank must be positive");
  }
  const int size = generators.front().dim();
  check_same_size(generators, size);
  const int full = size * size;
  const int max_dim =
      options.max_dim > 0 ? std::min(options.max_dim, full) : full;

  std::vector<Eigen::VectorXd> seeds;
  for (const auto& g : generators) {
    const double n = g.norm();
    if (n > 0.0) seeds.push_back(g.frobenius_coordinates() / n);
  }
  if (seeds.empty()) {
    throw std::invalid_argument("all generators are zero");
  }

  SpanBuilder span(size, full);
  const std::optional<Grading> grading =
      options.use_grading ? find_grading(generators, options.grading_tolerance)
                          : std::nullopt;
  LieClosureResult result;
  result.grading_blocks = grading ? grading->blocks : 1;
  result.size = size;
  result.eps_rank = options.eps_rank;
  result.error_margin = options.error_margin;

  {
    Eigen::MatrixXd cand(full, static_cast<Eigen::Index>(seeds.size()));
    for (std::size_t j = 0; j < seeds.size(); ++j) cand.col(j) = seeds[j];
    Eigen::VectorXd err =
        Eigen::VectorXd::Constant(cand.cols(), size * kUnitRoundoff);
    if (grading) split(*grading, cand, err);
    AbsorbStats s = absorb(span, std::move(cand), err, options, max_dim);
    result.fragile += s.fragile;
    std::vector<int> frontier = std::move(s.added);

    const double product_err = commutator_roundoff(size);
    while (!frontier.empty() && span.count() < max_dim) {
      const int existing = span.count();
      std::vector<bool> in_frontier(existing, false);
      for (int i : frontier) in_frontier[i] = true;

      std::vector<std::pair<int, int>> pairs;
      for (int i : frontier) {
        for (int j = 0; j < existing; ++j) {
          if (j == i || (in_frontier[j] && j < i)) continue;
          pairs.emplace_back(i, j);
        }
      }
      Eigen::MatrixXd batch(full, static_cast<Eigen::Index>(pairs.size()));
      Eigen::VectorXd batch_err(static_cast<Eigen::Index>(pairs.size()));
      const auto& mats = span.matrices();
      const auto& errs = span.error_list();
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto [i, j] = pairs[k];
        batch.col(k) = commutator(mats[i], mats[j]).frobenius_coordinates();
        batch_err(k) = 2.0 * std::hypot(errs[i], errs[j]) + product_err;
      }
      if (grading) split(*grading, batch, batch_err);
      result.commutators += static_cast<long>(pairs.size());
      ++result.generations;
      s = absorb(span, std::move(batch), batch_err, options, max_dim);
      result.fragile += s.fragile;
      frontier = std::move(s.added);
    }
  }

  result.basis = span.matrices();
  result.error_bounds = span.error_list();
  result.dimension = span.count();
  const double tol = result.membership_tolerance();
  result.contains_identity =
      span_contains(result.basis, SkewHermMatrix::identity(size), tol);
  result.identification = identify(result.basis, size, tol);
  return result;
}

LieClosureResult dynamical_algebra(const SystemSpec& spec,
                                   const ClosureOptions& options) {
  const SkewHermMatrix gens[] = {build_h0(spec), build_h1(spec)};
  return closure(gens, options);
}

bool span_contains(std::span<const SkewHermMatrix> basis,
                   const SkewHermMatrix& m, double eps) {
  check_same_size(basis, m.dim());
  const double n = m.norm();
  if (n == 0.0) return true;
  return residual_norm(basis, m) <= eps * n;
}

std::vector<SkewHermMatrix> orthonormalize(
    std::span<const SkewHermMatrix> elements, double eps) {
  std::vector<SkewHermMatrix> out;
  if (elements.empty()) return out;
  const int size = elements.front().dim();
  check_same_size(elements, size);
  for (const auto& m : elements) {
    const double n = m.norm();
    if (n == 0.0) continue;
    Eigen::VectorXd r = m.frobenius_coordinates();
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : out) {
        const Eigen::VectorXd q = b.frobenius_coordinates();
        r -= q.dot(r) * q;
      }
    }
    const double rho = r.norm();
    if (rho > eps * n) {
      out.push_back(SkewHermMatrix::from_frobenius_coordinates(size, r / rho));
    }
  }
  return out;
}

AlgebraId identify(std::span<const SkewHermMatrix> basis, int size,
                   double eps) {
  AlgebraId id;
  id.dimension = static_cast<int>(basis.size());
  if (id.dimension == size * size) {
    id.kind = AlgebraId::Kind::u_n;
  } else if (id.dimension == size * size - 1 &&
             !span_contains(basis, SkewHermMatrix::identity(size), eps)) {
    id.kind = AlgebraId::Kind::su_n;
  } else if (size == 4 && id.dimension == 11) {
    std::vector<SkewHermMatrix> target = sp2_basis();
    target.push_back(SkewHermMatrix::identity(4));
    const auto target_span = orthonormalize(target);
    for (int sign : {-1, +1}) {
      const Eigen::Matrix4cd u = sp2_relabelling(sign).cast<std::complex<double>>();
      const bool inside = std::all_of(basis.begin(), basis.end(), [&](const auto& b) {
        const SkewHermMatrix moved = SkewHermMatrix::skew_part(
            u.transpose() * b.matrix() * u);
        return span_contains(target_span, moved, eps);
      });
      if (inside) {
        id.kind = AlgebraId::Kind::sp2_plus_u1;
        break;
      }
    }
  } else if (size >= 3 && id.dimension == 4) {
    id.kind = AlgebraId::Kind::u2_like;
  }
  return id;
}

ClosureCertificate certify_closure(const LieClosureResult& result) {
  ClosureCertificate cert;
  cert.closed = true;
  const int n = result.dimension;
  const int full = result.size * result.size;
  Eigen::MatrixXd q(full, n);
  Eigen::VectorXd e(n);
  for (int i = 0; i < n; ++i) {
    q.col(i) = result.basis[i].frobenius_coordinates();
    e(i) = result.error_bounds[i];
  }
  const double product_err = commutator_roundoff(result.size);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Eigen::VectorXd r =
          commutator(result.basis[i], result.basis[j]).frobenius_coordinates();
      double err = 2.0 * std::hypot(e(i), e(j)) + product_err;
      for (int pass = 0; pass < 2; ++pass) {
        const Eigen::VectorXd coef = q.transpose() * r;
        r.noalias() -= q * coef;
        err = std::hypot(err, coef.cwiseProduct(e).norm());
      }
      const double residual = r.norm();
      const double tol = std::max(result.eps_rank, result.error_margin * err);
      cert.worst_ratio = std::max(cert.worst_ratio, residual / tol);
      if (residual > result.eps_rank) ++cert.pairs_above_eps_rank;
      if (residual > tol) cert.closed = false;
      ++cert.pairs_checked;
    }
  }
  return cert;
}

}  // namespace qcc
