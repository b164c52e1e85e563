#pragma once

#include "lieflat/lie_algebra.hpp"

#include <map>
#include <random>
#include <utility>
#include <vector>

namespace lieflat::testing {

inline Rational random_rational(std::mt19937& rng, long long span = 4, long long den_max = 3) {
  std::uniform_int_distribution<long long> num(-span, span);
  std::uniform_int_distribution<long long> den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Vec random_vector(std::mt19937& rng, Index n) {
  Vec v(n);
  for (Index i = 0; i < n; ++i) v(i) = random_rational(rng);
  return v;
}

inline Mat random_square(std::mt19937& rng, Index n) {
  Mat m(n, n);
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) m(r, c) = random_rational(rng);
  }
  return m;
}

// Bracket table oracle, independent of LieAlgebra: stores [Xi,Xj] for i < j
// and extends bilinearly by hand.
class BracketOracle {
public:
  BracketOracle(Index dim, const std::vector<LieAlgebra::BracketTerm>& terms) : dim_(dim) {
    for (const auto& t : terms) {
      auto& v = table_[{t.i, t.j}];
      if (v.size() == 0) v = Vec::Zero(dim);
      v(t.k) += t.coeff;
    }
  }

  Vec pair(Index i, Index j) const {
    if (i == j) return Vec::Zero(dim_);
    const bool flip = i > j;
    auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table_.end()) return Vec::Zero(dim_);
    return flip ? Vec(-it->second) : it->second;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec out = Vec::Zero(dim_);
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = 0; j < dim_; ++j) {
        const Rational c = x(i) * y(j);
        if (!c.is_zero()) out += c * pair(i, j);
      }
    }
    return out;
  }

  // All basis triples i<j<k with a nonzero Jacobi sum.
  std::vector<std::array<Index, 3>> jacobi_violations() const {
    std::vector<std::array<Index, 3>> bad;
    for (Index i = 0; i < dim_; ++i) {
      for (Index j = i + 1; j < dim_; ++j) {
        for (Index k = j + 1; k < dim_; ++k) {
          Vec sum = bracket(pair(i, j), unit_vector(dim_, k)) +
                    bracket(pair(j, k), unit_vector(dim_, i)) +
                    bracket(pair(k, i), unit_vector(dim_, j));
          if (!is_zero(sum)) bad.push_back({i, j, k});
        }
      }
    }
    return bad;
  }

private:
  Index dim_;
  std::map<std::pair<Index, Index>, Vec> table_;
};

}  // namespace lieflat::testing
