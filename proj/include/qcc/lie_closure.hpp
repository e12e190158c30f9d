#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcc/skew_herm.hpp"
#include "qcc/system_model.hpp"
#include "qcc/tolerance.hpp"

namespace qcc {

/// [a, b] = ab - ba. Throws std::invalid_argument on a dimension mismatch.
SkewHermMatrix commutator(const SkewHermMatrix& a, const SkewHermMatrix& b);

/// The names the closure can attach to a computed algebra.
struct AlgebraId {
  enum class Kind { u_n, su_n, u2_like, sp2_plus_u1, other };

  Kind kind = Kind::other;
  int dimension = 0;

  /// Machine tag: "u_n", "su_n", "u2_like", "sp2_plus_u1" or "other".
  std::string tag() const;
  /// Human label such as "u(4)", "su(3)", "sp(2)+u(1)" or "other(2)".
  std::string label(int size) const;

  bool operator==(const AlgebraId&) const = default;
};

struct ClosureOptions {
  /// Residual threshold for unit-norm candidates.
  double eps_rank = kDefaultEpsRank;
  /// Stop once this many basis elements exist; 0 means N^2.
  int max_dim = 0;
  /// Residuals not above this multiple of the propagated round-off bound
  /// are fragile.
  double error_margin = 10.0;
  /// Drop fragile candidates instead of accepting and counting them. The
  /// bound is a worst case and compounds through every cancellation, so on
  /// long near-degenerate chains this undercounts badly.
  bool reject_fragile = false;
  /// If a generator is diagonal, split every candidate along the frequency
  /// blocks of its adjoint action. Each block component stays in the algebra,
  /// and the split is exact, so near-degenerate spectra need no cancellation.
  bool use_grading = true;
  /// Relative gap below which two frequencies share a block.
  double grading_tolerance = 1e-9;
};

struct LieClosureResult {
  int size = 0;
  int dimension = 0;
  /// Orthonormal in the Frobenius inner product Re tr(A^dagger B).
  std::vector<SkewHermMatrix> basis;
  /// Running forward-error bound of each basis element (unit vectors).
  std::vector<double> error_bounds;
  bool contains_identity = false;
  AlgebraId identification;
  /// Commutator passes performed, including the final one that added nothing.
  int generations = 0;
  long commutators = 0;
  /// Candidates above eps_rank whose residual was not clearly above the
  /// round-off bound (accepted unless reject_fragile). Nonzero means the
  /// span was numerically delicate.
  int fragile = 0;
  /// Frequency blocks used to split candidates (1 when no grading applied).
  int grading_blocks = 1;
  double eps_rank = kDefaultEpsRank;
  double error_margin = 10.0;

  double max_error_bound() const;
  /// Tolerance for membership tests against this span.
  double membership_tolerance() const;
};

/// Breadth-first commutator closure of the real span of `generators`.
///
/// Generators are scaled to unit Frobenius norm and exact zeros are dropped.
/// Each pass commutes every element added by the previous pass against the
/// whole basis. Candidates of a pass are projected onto the current span and
/// absorbed largest-residual first, so directions that are only weakly
/// separated from the span are built from the best-conditioned material.
/// Throws std::invalid_argument if every generator is zero or the sizes
/// disagree.
LieClosureResult closure(std::span<const SkewHermMatrix> generators,
                         const ClosureOptions& options = {});

/// Closure of {i H0, i H1}.
LieClosureResult dynamical_algebra(const SystemSpec& spec,
                                   const ClosureOptions& options = {});

/// True iff m minus its projection onto span(basis) has norm <= eps * |m|.
/// `basis` must be orthonormal. The zero matrix is contained in every span.
bool span_contains(std::span<const SkewHermMatrix> basis,
                   const SkewHermMatrix& m, double eps);

/// Gram-Schmidt (with one reorthogonalization) of `elements`, dropping those
/// whose residual is at most eps times their norm.
std::vector<SkewHermMatrix> orthonormalize(
    std::span<const SkewHermMatrix> elements, double eps = 1e-12);

/// Names a closed span. Dimension N^2 is u(N); N^2-1 without i I is su(N);
/// dimension 11 at N=4 is sp(2)+u(1) only if, after the level relabelling
/// {1,2,3,4} -> {2,1,3,-+4}, the span lies inside sp(2) + i I; dimension 4
/// for N >= 3 is u(2)-like.
AlgebraId identify(std::span<const SkewHermMatrix> basis, int size,
                   double eps);

struct ClosureCertificate {
  bool closed = false;
  long pairs_checked = 0;
  /// Largest residual / tolerance over all pairs (<= 1 when closed).
  double worst_ratio = 0.0;
  /// Pairs whose residual exceeded the plain eps_rank but stayed within the
  /// round-off aware tolerance.
  long pairs_above_eps_rank = 0;
};

/// Re-derives every pairwise commutator of the basis and checks that it lies
/// in the span.
ClosureCertificate certify_closure(const LieClosureResult& result);

}  // namespace qcc
