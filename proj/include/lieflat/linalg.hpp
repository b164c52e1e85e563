#pragma once

#include "lieflat/rational.hpp"

#include <Eigen/Core>

#include <vector>

namespace Eigen {

template <>
struct NumTraits<lieflat::Rational> : GenericNumTraits<lieflat::Rational> {
  typedef lieflat::Rational Real;
  typedef lieflat::Rational NonInteger;
  typedef lieflat::Rational Nested;
  typedef lieflat::Rational Literal;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 40,
    MulCost = 40
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lieflat {

using Index = Eigen::Index;
using Mat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowVec = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

bool is_zero(const Mat& m);
bool mat_eq(const Mat& a, const Mat& b);

Vec unit_vector(Index dim, Index i);

/// Exact product; throws std::invalid_argument on a dimension mismatch.
Mat mat_mul(const Mat& a, const Mat& b);

/// ab - ba for square matrices of equal size.
Mat commutator(const Mat& a, const Mat& b);

/// Reduced row echelon form computed by exact Gauss-Jordan elimination.
/// Pivot entries are 1 with zeros above and below; the result is the
/// canonical normal form of the row space.
struct RowEchelonForm {
  Mat reduced;
  std::vector<Index> pivot_cols;
  Index rank() const { return static_cast<Index>(pivot_cols.size()); }
};

RowEchelonForm reduced_row_echelon(Mat m);

/// Full description of the solution set of A x = b. When the system is
/// infeasible `feasible` is false and `particular` is empty; `nullspace`
/// always holds a basis of the homogeneous solutions, one per column.
struct LinearSolution {
  bool feasible = false;
  Vec particular;
  Mat nullspace;
};

LinearSolution solve_linear(const Mat& a, const Vec& b);

/// Basis of ker(A), one vector per column (may have zero columns).
Mat nullspace_basis(const Mat& a);

/// Exact inverse; throws std::invalid_argument if the matrix is singular.
Mat invert(const Mat& a);

}  // namespace lieflat
