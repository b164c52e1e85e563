#include "lieflat/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace lieflat {

bool is_zero(const Mat& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

Vec unit_vector(Index dim, Index i) {
  Vec v = Vec::Zero(dim);
  v(i) = Rational(1);
  return v;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
  }
  return a * b;
}

Mat commutator(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("commutator needs square matrices of equal size");
  }
  return a * b - b * a;
}

RowEchelonForm reduced_row_echelon(Mat m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = -1;
    for (Index i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != r) m.row(r).swap(m.row(p));
    const Rational inv_pivot = Rational(1) / m(r, c);
    m.row(r) *= inv_pivot;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      m.row(i) -= factor * m.row(r);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

LinearSolution solve_linear(const Mat& a, const Vec& b) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_linear: right-hand side length mismatch");
  }
  const Index n = a.cols();
  Mat aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const RowEchelonForm ref = reduced_row_echelon(std::move(aug));

  LinearSolution sol;
  sol.feasible = true;
  std::vector<Index> a_pivots;
  for (Index c : ref.pivot_cols) {
    if (c == n) {
      sol.feasible = false;
    } else {
      a_pivots.push_back(c);
    }
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : a_pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }

  sol.nullspace = Mat::Zero(n, static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    sol.nullspace(f, static_cast<Index>(k)) = Rational(1);
    for (std::size_t r = 0; r < a_pivots.size(); ++r) {
      sol.nullspace(a_pivots[r], static_cast<Index>(k)) =
          -ref.reduced(static_cast<Index>(r), f);
    }
  }

  if (sol.feasible) {
    sol.particular = Vec::Zero(n);
    for (std::size_t r = 0; r < a_pivots.size(); ++r) {
      sol.particular(a_pivots[r]) = ref.reduced(static_cast<Index>(r), n);
    }
  }
  return sol;
}

Mat nullspace_basis(const Mat& a) {
  return solve_linear(a, Vec::Zero(a.rows())).nullspace;
}

Mat invert(const Mat& a) {
  if (a.rows() != a.cols()) {
    throw std::invalid_argument("invert: matrix is not square");
  }
  const Index n = a.rows();
  Mat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = Mat::Identity(n, n);
  const RowEchelonForm ref = reduced_row_echelon(std::move(aug));
  if (ref.rank() != n ||
      !std::all_of(ref.pivot_cols.begin(), ref.pivot_cols.end(),
                   [n](Index c) { return c < n; })) {
    throw std::invalid_argument("invert: singular matrix");
  }
  return ref.reduced.rightCols(n);
}

}  // namespace lieflat
