#include "lieflat/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace lieflat {

std::vector<std::string> default_labels(Index dim) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(dim));
  for (Index i = 1; i <= dim; ++i) labels.push_back("X" + std::to_string(i));
  return labels;
}

LieAlgebra::LieAlgebra(Index dim, const std::vector<BracketTerm>& terms,
                       std::string name, std::vector<std::string> labels)
    : name_(std::move(name)), labels_(std::move(labels)) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  if (labels_.empty()) labels_ = default_labels(dim);
  if (static_cast<Index>(labels_.size()) != dim) {
    throw std::invalid_argument("label count does not match dimension");
  }
  ad_.assign(static_cast<std::size_t>(dim), Mat::Zero(dim, dim));
  for (const auto& t : terms) {
    if (t.i < 0 || t.j >= dim || t.k < 0 || t.k >= dim) {
      throw std::invalid_argument("bracket term index out of range");
    }
    if (t.i >= t.j) {
      throw std::invalid_argument("bracket terms must have i < j");
    }
    ad_[static_cast<std::size_t>(t.i)](t.k, t.j) += t.coeff;
    ad_[static_cast<std::size_t>(t.j)](t.k, t.i) -= t.coeff;
  }
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim() || y.size() != dim()) {
    throw std::invalid_argument("bracket: vector length does not match dimension");
  }
  Vec out = Vec::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    out += x(i) * (ad(i) * y);
  }
  return out;
}

std::vector<LieAlgebra::BracketTerm> LieAlgebra::bracket_list() const {
  std::vector<BracketTerm> terms;
  for (Index i = 0; i < dim(); ++i) {
    for (Index j = i + 1; j < dim(); ++j) {
      for (Index k = 0; k < dim(); ++k) {
        const Rational& c = ad(i)(k, j);
        if (!c.is_zero()) terms.push_back({i, j, k, c});
      }
    }
  }
  return terms;
}

bool LieAlgebra::same_structure(const LieAlgebra& other) const {
  if (dim() != other.dim()) return false;
  for (Index i = 0; i < dim(); ++i) {
    if (!mat_eq(ad(i), other.ad(i))) return false;
  }
  return true;
}

LieAlgebra LieAlgebra::renamed(std::string name) const {
  LieAlgebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

Subspace Subspace::span(Index ambient_dim, const std::vector<Vec>& generators) {
  Mat rows(static_cast<Index>(generators.size()), ambient_dim);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].size() != ambient_dim) {
      throw std::invalid_argument("subspace generator has wrong length");
    }
    rows.row(static_cast<Index>(g)) = generators[g].transpose();
  }
  RowEchelonForm ref = reduced_row_echelon(std::move(rows));
  return Subspace(ambient_dim, ref.reduced.topRows(ref.rank()));
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) {
    throw std::invalid_argument("membership test against wrong ambient dimension");
  }
  // Reduce v against the canonical rows; membership iff the remainder is zero.
  Vec r = v;
  for (Index row = 0; row < basis_rows_.rows(); ++row) {
    Index pivot = -1;
    for (Index c = 0; c < ambient_; ++c) {
      if (!basis_rows_(row, c).is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot < 0) continue;
    if (!r(pivot).is_zero()) {
      r -= r(pivot) * basis_rows_.row(row).transpose();
    }
  }
  for (Index c = 0; c < ambient_; ++c) {
    if (!r(c).is_zero()) return false;
  }
  return true;
}

JacobiReport check_jacobi(const LieAlgebra& l) {
  JacobiReport report;
  const Index n = l.dim();
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        Vec residual = l.bracket(l.bracket_basis(i, j), unit_vector(n, k)) +
                       l.bracket(l.bracket_basis(j, k), unit_vector(n, i)) +
                       l.bracket(l.bracket_basis(k, i), unit_vector(n, j));
        if (!is_zero(residual)) {
          report.violations.push_back({i, j, k, std::move(residual)});
        }
      }
    }
  }
  return report;
}

Subspace derived_subalgebra(const LieAlgebra& l) {
  std::vector<Vec> gens;
  for (Index i = 0; i < l.dim(); ++i) {
    for (Index j = i + 1; j < l.dim(); ++j) {
      gens.push_back(l.bracket_basis(i, j));
    }
  }
  return Subspace::span(l.dim(), gens);
}

bool is_perfect(const LieAlgebra& l) {
  return derived_subalgebra(l).dim() == l.dim();
}

Subspace center(const LieAlgebra& l) {
  const Index n = l.dim();
  // x is central iff ad(x) = sum_i x_i ad(X_i) vanishes as a matrix.
  Mat system = Mat::Zero(n * n, n);
  for (Index i = 0; i < n; ++i) {
    const Mat& adi = l.ad(i);
    for (Index c = 0; c < n; ++c) {
      for (Index r = 0; r < n; ++r) {
        system(c * n + r, i) = adi(r, c);
      }
    }
  }
  const Mat kernel = nullspace_basis(system);
  std::vector<Vec> gens;
  for (Index c = 0; c < kernel.cols(); ++c) gens.push_back(kernel.col(c));
  return Subspace::span(n, gens);
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index na = a.dim();
  std::vector<LieAlgebra::BracketTerm> terms;
  for (const auto& t : a.bracket_list()) terms.push_back(t);
  for (const auto& t : b.bracket_list()) {
    terms.push_back({t.i + na, t.j + na, t.k + na, t.coeff});
  }
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  std::string name = a.name().empty() || b.name().empty()
                         ? std::string()
                         : a.name() + "+" + b.name();
  return LieAlgebra(na + b.dim(), terms, std::move(name), std::move(labels));
}

namespace {

Mat action_of(const std::vector<Mat>& action, const Vec& x) {
  Mat out = Mat::Zero(action.front().rows(), action.front().cols());
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) out += x(i) * action[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

LieAlgebra semidirect_sum(const LieAlgebra& h, const LieAlgebra& k,
                          const std::vector<Mat>& action) {
  const Index nh = h.dim();
  const Index nk = k.dim();
  if (static_cast<Index>(action.size()) != nh) {
    throw std::invalid_argument("semidirect_sum: one action matrix per h basis vector");
  }
  for (const Mat& m : action) {
    if (m.rows() != nk || m.cols() != nk) {
      throw std::invalid_argument("semidirect_sum: action matrices must be dim(k) square");
    }
  }
  // Each action(x) must be a derivation of k.
  for (Index a = 0; a < nh; ++a) {
    const Mat& d = action[static_cast<std::size_t>(a)];
    for (Index i = 0; i < nk; ++i) {
      for (Index j = i + 1; j < nk; ++j) {
        Vec lhs = d * k.bracket_basis(i, j);
        Vec rhs = k.bracket(d.col(i), unit_vector(nk, j)) +
                  k.bracket(unit_vector(nk, i), d.col(j));
        if (!is_zero(lhs - rhs)) {
          throw std::invalid_argument("semidirect_sum: action of " + h.label(a) +
                                      " is not a derivation of k");
        }
      }
    }
  }
  // And x -> action(x) must be a homomorphism.
  for (Index i = 0; i < nh; ++i) {
    for (Index j = i + 1; j < nh; ++j) {
      Mat lhs = action_of(action, h.bracket_basis(i, j));
      Mat rhs = commutator(action[static_cast<std::size_t>(i)],
                           action[static_cast<std::size_t>(j)]);
      if (!mat_eq(lhs, rhs)) {
        throw std::invalid_argument("semidirect_sum: action is not a Lie algebra homomorphism");
      }
    }
  }

  std::vector<LieAlgebra::BracketTerm> terms;
  for (const auto& t : h.bracket_list()) terms.push_back(t);
  for (const auto& t : k.bracket_list()) {
    terms.push_back({t.i + nh, t.j + nh, t.k + nh, t.coeff});
  }
  for (Index a = 0; a < nh; ++a) {
    const Mat& d = action[static_cast<std::size_t>(a)];
    for (Index y = 0; y < nk; ++y) {
      for (Index t = 0; t < nk; ++t) {
        if (!d(t, y).is_zero()) terms.push_back({a, nh + y, nh + t, d(t, y)});
      }
    }
  }
  std::vector<std::string> labels = h.labels();
  labels.insert(labels.end(), k.labels().begin(), k.labels().end());
  LieAlgebra result(nh + nk, terms, "", std::move(labels));
  if (!check_jacobi(result).ok()) {
    throw std::invalid_argument("semidirect_sum: combined tensor violates the Jacobi identity");
  }
  return result;
}

LieAlgebra subalgebra_on_indices(const LieAlgebra& l, const std::vector<Index>& indices,
                                 std::string name) {
  const Index m = static_cast<Index>(indices.size());
  std::vector<Index> pos(static_cast<std::size_t>(l.dim()), -1);
  for (Index a = 0; a < m; ++a) {
    const Index g = indices[static_cast<std::size_t>(a)];
    if (g < 0 || g >= l.dim()) throw std::invalid_argument("subalgebra index out of range");
    pos[static_cast<std::size_t>(g)] = a;
  }
  std::vector<LieAlgebra::BracketTerm> terms;
  std::vector<std::string> labels;
  for (Index a = 0; a < m; ++a) labels.push_back(l.label(indices[static_cast<std::size_t>(a)]));
  for (Index a = 0; a < m; ++a) {
    for (Index b = a + 1; b < m; ++b) {
      Vec v = l.bracket_basis(indices[static_cast<std::size_t>(a)],
                              indices[static_cast<std::size_t>(b)]);
      for (Index g = 0; g < l.dim(); ++g) {
        if (v(g).is_zero()) continue;
        if (pos[static_cast<std::size_t>(g)] < 0) {
          throw std::invalid_argument(
              "selected basis vectors do not span a subalgebra: [" +
              l.label(indices[static_cast<std::size_t>(a)]) + "," +
              l.label(indices[static_cast<std::size_t>(b)]) + "] leaves the span");
        }
        terms.push_back({a, b, pos[static_cast<std::size_t>(g)], v(g)});
      }
    }
  }
  return LieAlgebra(m, terms, std::move(name), std::move(labels));
}

std::vector<Index> GradedDecomposition::k_part() const {
  std::vector<Index> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.begin(), layer.end());
  out.insert(out.end(), zprime.begin(), zprime.end());
  return out;
}

GradingReport validate_grading(const LieAlgebra& l, const GradedDecomposition& d) {
  const Index n = l.dim();
  std::set<Index> seen;
  auto note = [&](const std::vector<Index>& v) {
    for (Index i : v) {
      if (i < 0 || i >= n || !seen.insert(i).second) {
        throw std::invalid_argument("decomposition index sets must partition the basis");
      }
    }
  };
  note(d.h);
  for (const auto& layer : d.layers) note(layer);
  note(d.zprime);
  if (static_cast<Index>(seen.size()) != n) {
    throw std::invalid_argument("decomposition index sets must partition the basis");
  }

  const Index r = static_cast<Index>(d.layers.size());
  auto span_of = [&](const std::vector<Index>& idx) {
    std::vector<Vec> gens;
    for (Index i : idx) gens.push_back(unit_vector(n, i));
    return Subspace::span(n, gens);
  };
  auto check_pair = [&](Index i, Index j, const Subspace& target,
                        const std::string& condition) -> std::optional<GradingViolation> {
    Vec v = l.bracket_basis(i, j);
    if (target.contains(v)) return std::nullopt;
    return GradingViolation{condition, i, j, std::move(v)};
  };

  GradingReport report;
  const std::vector<Index> kp = d.k_part();
  const Subspace zspan = span_of(d.zprime);

  // Z' must be central in the k-part.
  for (Index x : kp) {
    for (Index z : d.zprime) {
      Vec v = l.bracket_basis(x, z);
      if (!is_zero(v)) {
        report.violation = GradingViolation{"zprime-central", x, z, std::move(v)};
        return report;
      }
    }
  }
  // [k_i, k_j] in k_{i+j} + Z'.
  for (Index li = 0; li < r; ++li) {
    for (Index lj = li; lj < r; ++lj) {
      std::vector<Index> target = d.zprime;
      if (li + lj + 1 < r) {
        const auto& far = d.layers[static_cast<std::size_t>(li + lj + 1)];
        target.insert(target.end(), far.begin(), far.end());
      }
      const Subspace tspan = span_of(target);
      for (Index x : d.layers[static_cast<std::size_t>(li)]) {
        for (Index y : d.layers[static_cast<std::size_t>(lj)]) {
          if (x == y) continue;
          if (auto v = check_pair(x, y, tspan,
                                  "layer-grading k" + std::to_string(li + 1) + "*k" +
                                      std::to_string(lj + 1))) {
            report.violation = std::move(v);
            return report;
          }
        }
      }
    }
  }
  // [h, k_i] in k_i + Z'.
  for (Index li = 0; li < r; ++li) {
    std::vector<Index> target = d.layers[static_cast<std::size_t>(li)];
    target.insert(target.end(), d.zprime.begin(), d.zprime.end());
    const Subspace tspan = span_of(target);
    for (Index x : d.h) {
      for (Index y : d.layers[static_cast<std::size_t>(li)]) {
        if (auto v = check_pair(x, y, tspan, "h-action on k" + std::to_string(li + 1))) {
          report.violation = std::move(v);
          return report;
        }
      }
    }
  }
  // [h, Z'] in Z'.
  for (Index x : d.h) {
    for (Index z : d.zprime) {
      if (auto v = check_pair(x, z, zspan, "h-action on zprime")) {
        report.violation = std::move(v);
        return report;
      }
    }
  }
  return report;
}

}  // namespace lieflat
