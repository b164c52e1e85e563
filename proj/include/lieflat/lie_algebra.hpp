#pragma once

#include "lieflat/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieflat {

/// Finite-dimensional Lie algebra over the rationals, stored as a
/// structure-constants tensor on a fixed basis X_1..X_n.
///
/// Construction takes the bracket terms for i < j only; the antisymmetric
/// counterparts are derived, so antisymmetry holds by construction. The
/// Jacobi identity is *not* implied; run check_jacobi.
class LieAlgebra {
public:
  struct BracketTerm {
    Index i, j, k;  // 0-based, i < j
    Rational coeff;
  };

  LieAlgebra(Index dim, const std::vector<BracketTerm>& terms,
             std::string name = "", std::vector<std::string> labels = {});

  Index dim() const { return static_cast<Index>(ad_.size()); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Index i) const { return labels_[static_cast<std::size_t>(i)]; }

  /// Matrix of ad(X_i): column j holds the coordinates of [X_i, X_j].
  const Mat& ad(Index i) const { return ad_[static_cast<std::size_t>(i)]; }

  /// [X_i, X_j] as a coordinate vector.
  Vec bracket_basis(Index i, Index j) const { return ad(i).col(j); }

  /// Bilinear extension of the structure constants.
  Vec bracket(const Vec& x, const Vec& y) const;

  /// Canonical i < j list of the nonzero bracket terms.
  std::vector<BracketTerm> bracket_list() const;

  /// Structure constants agree entry for entry (names and labels ignored).
  bool same_structure(const LieAlgebra& other) const;

  LieAlgebra renamed(std::string name) const;

private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Mat> ad_;
};

std::vector<std::string> default_labels(Index dim);

/// Span of vectors in a fixed ambient space, held in reduced row echelon
/// normal form so that equality and membership are exact and canonical.
class Subspace {
public:
  static Subspace span(Index ambient_dim, const std::vector<Vec>& generators);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_rows_.rows(); }
  bool contains(const Vec& v) const;
  /// Canonical basis, one vector per row.
  const Mat& basis_rows() const { return basis_rows_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && mat_eq(a.basis_rows_, b.basis_rows_);
  }

private:
  Subspace(Index ambient, Mat rows) : ambient_(ambient), basis_rows_(std::move(rows)) {}
  Index ambient_;
  Mat basis_rows_;
};

struct JacobiViolation {
  Index i, j, k;  // 0-based basis triple
  Vec residual;   // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
};

struct JacobiReport {
  std::vector<JacobiViolation> violations;
  bool ok() const { return violations.empty(); }
};

JacobiReport check_jacobi(const LieAlgebra& l);

Subspace derived_subalgebra(const LieAlgebra& l);
bool is_perfect(const LieAlgebra& l);
Subspace center(const LieAlgebra& l);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

/// Semidirect sum h |x k. `action` holds one k-endomorphism per basis vector
/// of h; it must act by derivations of k and be a Lie algebra homomorphism,
/// both checked exactly. The combined tensor is re-checked for Jacobi.
LieAlgebra semidirect_sum(const LieAlgebra& h, const LieAlgebra& k,
                          const std::vector<Mat>& action);

/// The induced algebra on a bracket-closed index subset; throws if some
/// bracket leaves the span of the selected basis vectors.
LieAlgebra subalgebra_on_indices(const LieAlgebra& l, const std::vector<Index>& indices,
                                 std::string name = "");

/// Index partition of the basis into h | k_1..k_r | Z'. Layers and the
/// central part may be empty.
struct GradedDecomposition {
  std::vector<Index> h;
  std::vector<std::vector<Index>> layers;
  std::vector<Index> zprime;

  std::vector<Index> k_part() const;  // layers followed by zprime
};

struct GradingViolation {
  std::string condition;
  Index i, j;    // offending basis pair
  Vec residual;  // component of [Xi,Xj] outside the allowed span
};

struct GradingReport {
  std::optional<GradingViolation> violation;
  bool ok() const { return !violation.has_value(); }
};

/// Checks the four bracket inclusions of a graded decomposition:
/// Z' central in the k-part, [k_i,k_j] in k_{i+j} (+) Z', [h,k_i] in
/// k_i (+) Z', and [h,Z'] in Z'. The index sets must partition the basis.
GradingReport validate_grading(const LieAlgebra& l, const GradedDecomposition& d);

}  // namespace lieflat
