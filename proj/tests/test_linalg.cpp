#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lieflat/linalg.hpp"

#include <random>

using namespace lieflat;

namespace {

Mat random_matrix(std::mt19937& rng, Index rows, Index cols, int zero_chance = 2) {
  std::uniform_int_distribution<long long> num(-4, 4);
  std::uniform_int_distribution<long long> den(1, 3);
  std::uniform_int_distribution<int> zero(0, zero_chance);
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      m(r, c) = zero(rng) == 0 ? Rational(0) : Rational(num(rng), den(rng));
    }
  }
  return m;
}

}  // namespace

TEST_CASE("mat_mul basics") {
  Mat m = Mat::Identity(3, 3);
  Mat a(3, 3);
  a << Rational(1), Rational(2), Rational(3),
       Rational(0), Rational(1, 2), Rational(-1),
       Rational(5), Rational(0), Rational(7, 3);
  CHECK(mat_eq(mat_mul(m, a), a));
  CHECK(mat_eq(mat_mul(a, m), a));

  Mat nil(2, 2);
  nil << Rational(0), Rational(1), Rational(0), Rational(0);
  CHECK(is_zero(mat_mul(nil, nil)));

  Mat rect(2, 3);
  CHECK_THROWS_AS(mat_mul(rect, rect), std::invalid_argument);
}

TEST_CASE("commutator basics") {
  Mat h(2, 2), e(2, 2);
  h << Rational(1), Rational(0), Rational(0), Rational(-1);
  e << Rational(0), Rational(1), Rational(0), Rational(0);
  Mat expected(2, 2);
  expected << Rational(0), Rational(2), Rational(0), Rational(0);
  CHECK(mat_eq(commutator(h, e), expected));
  CHECK(is_zero(commutator(h, h)));
  Mat rect(2, 3);
  CHECK_THROWS_AS(commutator(rect, rect), std::invalid_argument);
}

TEST_CASE("rref canonical form") {
  Mat m(3, 4);
  m << Rational(2), Rational(4), Rational(0), Rational(2),
       Rational(1), Rational(2), Rational(1), Rational(2),
       Rational(3), Rational(6), Rational(1), Rational(4);
  RowEchelonForm ref = reduced_row_echelon(m);
  CHECK(ref.rank() == 2);
  CHECK(ref.pivot_cols == std::vector<Index>{0, 2});
  // Reducing an already reduced matrix changes nothing.
  RowEchelonForm again = reduced_row_echelon(ref.reduced);
  CHECK(mat_eq(again.reduced, ref.reduced));
}

TEST_CASE("solve_linear identity and trivial cases") {
  Vec b(3);
  b << Rational(1, 2), Rational(-3), Rational(7);
  LinearSolution sol = solve_linear(Mat::Identity(3, 3), b);
  REQUIRE(sol.feasible);
  CHECK(mat_eq(sol.particular, b));
  CHECK(sol.nullspace.cols() == 0);

  LinearSolution bad = solve_linear(Mat::Zero(3, 3), b);
  CHECK(!bad.feasible);
  CHECK(bad.nullspace.cols() == 3);

  LinearSolution everything = solve_linear(Mat::Zero(3, 3), Vec::Zero(3));
  CHECK(everything.feasible);
  CHECK(everything.nullspace.cols() == 3);
}

TEST_CASE("every reported solution satisfies the system exactly") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<Index> size(1, 7);
  std::uniform_int_distribution<long long> combo(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = size(rng), cols = size(rng);
    const Mat a = random_matrix(rng, rows, cols);
    // Half the trials get a right-hand side known to be consistent.
    Vec b;
    if (trial % 2 == 0) {
      b = a * random_matrix(rng, cols, 1);
    } else {
      b = random_matrix(rng, rows, 1);
    }
    const LinearSolution sol = solve_linear(a, b);
    if (trial % 2 == 0) CHECK(sol.feasible);
    for (Index k = 0; k < sol.nullspace.cols(); ++k) {
      CHECK(is_zero(a * sol.nullspace.col(k)));
    }
    if (sol.feasible) {
      CHECK(is_zero(a * sol.particular - b));
      // Arbitrary combinations of the nullspace basis stay solutions.
      Vec x = sol.particular;
      for (Index k = 0; k < sol.nullspace.cols(); ++k) {
        x += Rational(combo(rng)) * sol.nullspace.col(k);
      }
      CHECK(is_zero(a * x - b));
    } else {
      // Infeasibility is a certificate: no candidate should work, in
      // particular the least-squares-like reconstruction cannot.
      CHECK(!is_zero(a * Vec::Zero(cols) - b));
    }
  }
}

TEST_CASE("elimination on an ill-conditioned exact system") {
  // Hilbert-style matrix: float pivoting would be hopeless, exact is not.
  const Index n = 8;
  Mat h(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) h(i, j) = Rational(1, static_cast<long long>(i + j + 1));
  }
  Vec ones = Vec::Zero(n);
  for (Index i = 0; i < n; ++i) ones(i) = Rational(1);
  const Vec b = h * ones;
  const LinearSolution sol = solve_linear(h, b);
  REQUIRE(sol.feasible);
  CHECK(mat_eq(sol.particular, ones));
  CHECK(sol.nullspace.cols() == 0);
}

TEST_CASE("invert") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Mat a = random_matrix(rng, 4, 4, 4);
    a += Mat::Identity(4, 4);  // nudge towards invertibility; singular ones throw
    try {
      const Mat inv = invert(a);
      CHECK(mat_eq(a * inv, Mat::Identity(4, 4)));
      CHECK(mat_eq(inv * a, Mat::Identity(4, 4)));
    } catch (const std::invalid_argument&) {
      // must really be singular: some nonzero kernel vector exists
      CHECK(nullspace_basis(a).cols() > 0);
    }
  }
  CHECK_THROWS_AS(invert(Mat::Zero(2, 2)), std::invalid_argument);
}
