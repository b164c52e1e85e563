#include "lieflat/flat_structures.hpp"

#include <stdexcept>
#include <utility>

namespace lieflat {

EndoValuedMap::EndoValuedMap(LieAlgebra source, std::vector<Mat> mats,
                             std::vector<std::string> notes)
    : source_(std::move(source)), mats_(std::move(mats)), notes_(std::move(notes)) {
  if (static_cast<Index>(mats_.size()) != source_.dim()) {
    throw std::invalid_argument("one matrix per source basis vector required");
  }
  const Index m = target_dim();
  for (const Mat& mat : mats_) {
    if (mat.rows() != m || mat.cols() != m) {
      throw std::invalid_argument("endomorphism matrices must be square of equal size");
    }
  }
}

Mat EndoValuedMap::apply(const Vec& x) const {
  if (x.size() != source_.dim()) {
    throw std::invalid_argument("apply: vector length does not match source dimension");
  }
  Mat out = Mat::Zero(target_dim(), target_dim());
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) out += x(i) * matrix_of(i);
  }
  return out;
}

EndoValuedMap EndoValuedMap::with_notes(std::vector<std::string> notes) const {
  return EndoValuedMap(source_, mats_, std::move(notes));
}

GradedHom::GradedHom(LieAlgebra source, std::vector<Mat> assembled,
                     std::vector<std::string> notes)
    : source_(std::move(source)), fmats_(std::move(assembled)), notes_(std::move(notes)) {
  if (static_cast<Index>(fmats_.size()) != source_.dim()) {
    throw std::invalid_argument("one assembled matrix per source basis vector required");
  }
  const Index m = source_.dim() + 1;
  for (const Mat& mat : fmats_) {
    if (mat.rows() != m || mat.cols() != m) {
      throw std::invalid_argument("assembled matrices must be (n+1) x (n+1)");
    }
  }
}

GradedHom GradedHom::from_blocks(LieAlgebra source, const std::vector<Mat>& b,
                                 const std::vector<Vec>& u, const std::vector<RowVec>& xi,
                                 const std::vector<Rational>& corner,
                                 std::vector<std::string> notes) {
  const Index n = source.dim();
  std::vector<Mat> fmats;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    Mat f = Mat::Zero(n + 1, n + 1);
    f.topLeftCorner(n, n) = b[i];
    f.topRightCorner(n, 1) = u[i];
    f.bottomLeftCorner(1, n) = xi[i];
    f(n, n) = corner[i];
    fmats.push_back(std::move(f));
  }
  return GradedHom(std::move(source), std::move(fmats), std::move(notes));
}

Mat GradedHom::assemble(const Vec& x) const {
  const Index m = n() + 1;
  Mat out = Mat::Zero(m, m);
  for (Index i = 0; i < x.size(); ++i) {
    if (!x(i).is_zero()) out += x(i) * matrix_of(i);
  }
  return out;
}

GradedHom GradedHom::with_notes(std::vector<std::string> notes) const {
  return GradedHom(source_, fmats_, std::move(notes));
}

std::string witness_kind_name(WitnessKind k) {
  switch (k) {
    case WitnessKind::Ifas: return "ifas";
    case WitnessKind::PHom: return "phom";
    case WitnessKind::NHom: return "nhom";
    case WitnessKind::ExtendedHom: return "extended";
  }
  return "?";
}

namespace {

void require_endo_dims(const LieAlgebra& l, const EndoValuedMap& g) {
  if (g.source().dim() != l.dim() || g.target_dim() != l.dim()) {
    throw std::invalid_argument("witness dimensions do not match the algebra");
  }
}

void require_graded_dims(const LieAlgebra& l, const GradedHom& f) {
  if (f.n() != l.dim()) {
    throw std::invalid_argument("graded map dimensions do not match the algebra");
  }
}

}  // namespace

std::optional<Counterexample> check_star(const LieAlgebra& l, const EndoValuedMap& g) {
  require_endo_dims(l, g);
  for (Index i = 0; i < l.dim(); ++i) {
    for (Index j = i + 1; j < l.dim(); ++j) {
      Vec residual = g.matrix_of(i).col(j) - g.matrix_of(j).col(i) - l.bracket_basis(i, j);
      if (!is_zero(residual)) {
        return Counterexample{"torsion-free", i, j, std::move(residual)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_endo_hom(const LieAlgebra& l, const EndoValuedMap& g) {
  require_endo_dims(l, g);
  for (Index i = 0; i < l.dim(); ++i) {
    for (Index j = i + 1; j < l.dim(); ++j) {
      Mat residual = commutator(g.matrix_of(i), g.matrix_of(j)) - g.apply(l.bracket_basis(i, j));
      if (!is_zero(residual)) {
        return Counterexample{"flat", i, j, std::move(residual)};
      }
    }
  }
  return std::nullopt;
}

WitnessCertificate verify_ifas(const LieAlgebra& l, const EndoValuedMap& g) {
  WitnessCertificate cert{WitnessKind::Ifas, {}, {}};
  if (auto c = check_star(l, g)) {
    cert.counterexample = std::move(c);
    return cert;
  }
  cert.checks_passed.push_back("torsion-free");
  if (auto c = check_endo_hom(l, g)) {
    cert.counterexample = std::move(c);
    return cert;
  }
  cert.checks_passed.push_back("flat");
  return cert;
}

std::vector<Mat> torsion(const LieAlgebra& l, const EndoValuedMap& g) {
  require_endo_dims(l, g);
  const Index n = l.dim();
  std::vector<Mat> t(static_cast<std::size_t>(n), Mat::Zero(n, n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      t[static_cast<std::size_t>(i)].col(j) =
          g.matrix_of(i).col(j) - g.matrix_of(j).col(i) - l.bracket_basis(i, j);
    }
  }
  return t;
}

std::vector<std::vector<Mat>> curvature(const LieAlgebra& l, const EndoValuedMap& g) {
  require_endo_dims(l, g);
  const Index n = l.dim();
  std::vector<std::vector<Mat>> r(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      r[static_cast<std::size_t>(i)].push_back(
          commutator(g.matrix_of(i), g.matrix_of(j)) - g.apply(l.bracket_basis(i, j)));
    }
  }
  return r;
}

bool torsion_is_zero(const std::vector<Mat>& t) {
  for (const Mat& m : t) {
    if (!is_zero(m)) return false;
  }
  return true;
}

bool curvature_is_zero(const std::vector<std::vector<Mat>>& r) {
  for (const auto& row : r) {
    for (const Mat& m : row) {
      if (!is_zero(m)) return false;
    }
  }
  return true;
}

WitnessCertificate check_p_hom(const LieAlgebra& l, const GradedHom& f) {
  require_graded_dims(l, f);
  WitnessCertificate cert{WitnessKind::PHom, {}, {}};
  const Index n = l.dim();
  for (Index i = 0; i < n; ++i) {
    const Rational tr = f.matrix_of(i).trace();
    if (!tr.is_zero()) {
      Mat residual(1, 1);
      residual(0, 0) = tr;
      cert.counterexample = Counterexample{"traceless", i, i, std::move(residual)};
      return cert;
    }
  }
  cert.checks_passed.push_back("traceless");
  for (Index i = 0; i < n; ++i) {
    Vec residual = f.u_part(i) - unit_vector(n, i);
    if (!is_zero(residual)) {
      cert.counterexample = Counterexample{"translation-identity", i, i, std::move(residual)};
      return cert;
    }
  }
  cert.checks_passed.push_back("translation-identity");
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      Mat residual =
          commutator(f.matrix_of(i), f.matrix_of(j)) - f.assemble(l.bracket_basis(i, j));
      if (!is_zero(residual)) {
        cert.counterexample = Counterexample{"homomorphism", i, j, std::move(residual)};
        return cert;
      }
    }
  }
  cert.checks_passed.push_back("homomorphism");
  return cert;
}

WitnessCertificate check_n_hom(const LieAlgebra& l, const GradedHom& f) {
  WitnessCertificate cert = check_p_hom(l, f);
  cert.kind = WitnessKind::NHom;
  if (!cert.ok()) return cert;
  for (Index i = 0; i < l.dim(); ++i) {
    const Rational c = f.corner(i);
    if (!c.is_zero()) {
      Mat residual(1, 1);
      residual(0, 0) = c;
      cert.counterexample = Counterexample{"corner-zero", i, i, std::move(residual)};
      return cert;
    }
  }
  cert.checks_passed.push_back("corner-zero");
  return cert;
}

WitnessCertificate check_extended_hom(const LieAlgebra& lext, const EndoValuedMap& h) {
  require_endo_dims(lext, h);
  WitnessCertificate cert{WitnessKind::ExtendedHom, {}, {}};
  const Index m = lext.dim();
  const Index e = m - 1;
  for (Index i = 0; i < m; ++i) {
    Vec residual = h.matrix_of(i).col(e) - unit_vector(m, i);
    if (!is_zero(residual)) {
      cert.counterexample = Counterexample{"unit-column", i, e, std::move(residual)};
      return cert;
    }
  }
  cert.checks_passed.push_back("unit-column");
  for (Index i = 0; i < e; ++i) {
    Vec residual = lext.bracket_basis(i, e);
    if (!is_zero(residual)) {
      cert.counterexample = Counterexample{"unit-line-central", i, e, std::move(residual)};
      return cert;
    }
  }
  cert.checks_passed.push_back("unit-line-central");
  if (auto c = check_endo_hom(lext, h)) {
    c->predicate = "homomorphism";
    cert.counterexample = std::move(c);
    return cert;
  }
  cert.checks_passed.push_back("homomorphism");
  return cert;
}

std::optional<RowVec> projectively_equivalent(const GradedHom& f, const GradedHom& fprime) {
  if (!f.source().same_structure(fprime.source())) {
    throw std::invalid_argument("projective equivalence needs a common source algebra");
  }
  if (!check_p_hom(f.source(), f).ok() || !check_p_hom(fprime.source(), fprime).ok()) {
    throw std::invalid_argument("projective equivalence is defined between verified maps");
  }
  const Index n = f.n();
  // Unknown covector xi, one equation per entry of each degree-zero block
  // difference plus one per corner.
  Mat system = Mat::Zero(n * n * n + n, n);
  Vec rhs = Vec::Zero(n * n * n + n);
  Index row = 0;
  for (Index i = 0; i < n; ++i) {
    const Mat diff = fprime.b_block(i) - f.b_block(i);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        if (r == i) {
          system(row, c) = Rational(-1);
        }
        rhs(row) = diff(r, c);
        ++row;
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    system(row, i) = Rational(1);
    rhs(row) = fprime.corner(i) - f.corner(i);
    ++row;
  }
  const LinearSolution sol = solve_linear(system, rhs);
  if (!sol.feasible) return std::nullopt;
  return RowVec(sol.particular.transpose());
}

GradedHom unipotent_twist(const GradedHom& f, const RowVec& xi) {
  const Index n = f.n();
  if (xi.size() != n) {
    throw std::invalid_argument("twist covector length does not match the algebra");
  }
  Mat p = Mat::Identity(n + 1, n + 1);
  p.bottomLeftCorner(1, n) = xi;
  Mat pinv = Mat::Identity(n + 1, n + 1);
  pinv.bottomLeftCorner(1, n) = -xi;
  std::vector<Mat> twisted;
  twisted.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    twisted.push_back(p * f.matrix_of(i) * pinv);
  }
  return GradedHom(f.source(), std::move(twisted));
}

GradedHom normalize_to_n(const GradedHom& f) {
  if (!check_p_hom(f.source(), f).ok()) {
    throw std::invalid_argument("normalization needs a verified map");
  }
  const Index n = f.n();
  RowVec xi(n);
  for (Index i = 0; i < n; ++i) xi(i) = f.b_block(i).trace();
  GradedHom out = unipotent_twist(f, xi);
  if (!check_n_hom(out.source(), out).ok() || !projectively_equivalent(f, out)) {
    throw std::logic_error("normalization produced an unverified map");
  }
  return out;
}

GradedHom p_hom_from_ifas(const LieAlgebra& l, const EndoValuedMap& g) {
  if (!verify_ifas(l, g).ok()) {
    throw std::invalid_argument("input map is not a certified torsion-free flat witness");
  }
  const Index n = l.dim();
  std::vector<Mat> fmats;
  for (Index i = 0; i < n; ++i) {
    const Rational tr_share = g.matrix_of(i).trace() / Rational(n + 1);
    Mat f = Mat::Zero(n + 1, n + 1);
    f.topLeftCorner(n, n) = g.matrix_of(i) - tr_share * Mat::Identity(n, n);
    f.topRightCorner(n, 1) = unit_vector(n, i);
    f(n, n) = -f.topLeftCorner(n, n).trace();
    fmats.push_back(std::move(f));
  }
  GradedHom out(l, std::move(fmats));
  if (!check_p_hom(l, out).ok()) {
    throw std::logic_error("block assembly produced an unverified map");
  }
  return out;
}

EndoValuedMap extended_hom_from_n(const GradedHom& f) {
  if (!check_n_hom(f.source(), f).ok()) {
    throw std::invalid_argument("extension needs a corner-free verified map");
  }
  const Index n = f.n();
  LieAlgebra line(1, {}, "a1", {"e"});
  LieAlgebra ext = direct_sum(f.source(), line);
  std::vector<Mat> mats = f.matrices();
  mats.push_back(Mat::Identity(n + 1, n + 1));
  EndoValuedMap out(ext, std::move(mats));
  if (!check_extended_hom(ext, out).ok()) {
    throw std::logic_error("extension produced an unverified map");
  }
  return out;
}

GradedHom p_hom_from_extended(const EndoValuedMap& h) {
  const LieAlgebra& ext = h.source();
  const WitnessCertificate cert = check_extended_hom(ext, h);
  if (!cert.ok()) {
    throw std::invalid_argument("not an extended homomorphism: " +
                                cert.counterexample->predicate + " fails");
  }
  const Index m = ext.dim();
  std::vector<Index> base(static_cast<std::size_t>(m - 1));
  for (Index i = 0; i + 1 < m; ++i) base[static_cast<std::size_t>(i)] = i;
  LieAlgebra l = subalgebra_on_indices(ext, base, ext.name());
  std::vector<Mat> fmats;
  for (Index i = 0; i + 1 < m; ++i) {
    const Rational tr_share = h.matrix_of(i).trace() / Rational(m);
    fmats.push_back(h.matrix_of(i) - tr_share * Mat::Identity(m, m));
  }
  GradedHom out(l, std::move(fmats));
  if (!check_p_hom(l, out).ok()) {
    throw std::logic_error("restriction produced an unverified map");
  }
  return out;
}

EndoValuedMap connection_from(const GradedHom& f) {
  if (!check_p_hom(f.source(), f).ok()) {
    throw std::invalid_argument("connection extraction needs a verified map");
  }
  const Index n = f.n();
  std::vector<Mat> mats;
  for (Index i = 0; i < n; ++i) {
    const Mat b = f.b_block(i);
    mats.push_back(b + b.trace() * Mat::Identity(n, n));
  }
  EndoValuedMap out(f.source(), std::move(mats));
  if (check_star(f.source(), out)) {
    throw std::logic_error("degree-zero block is not torsion-free");
  }
  return out;
}

ReducibilityReport is_reducible(const LieAlgebra& h_alg, const EndoValuedMap& g,
                                Index a_index, const std::vector<Index>& hprime) {
  if (!verify_ifas(h_alg, g).ok()) {
    throw std::invalid_argument("reducibility is defined for certified witnesses");
  }
  const Index n = h_alg.dim();
  std::vector<bool> in_hprime(static_cast<std::size_t>(n), false);
  for (Index y : hprime) {
    if (y < 0 || y >= n || y == a_index || in_hprime[static_cast<std::size_t>(y)]) {
      throw std::invalid_argument("line index and complement must partition the basis");
    }
    in_hprime[static_cast<std::size_t>(y)] = true;
  }
  if (a_index < 0 || a_index >= n ||
      static_cast<Index>(hprime.size()) != n - 1) {
    throw std::invalid_argument("line index and complement must partition the basis");
  }

  ReducibilityReport report;
  // Structural part of the split: the complement must be a subalgebra on
  // which the line acts.
  try {
    subalgebra_on_indices(h_alg, hprime);
  } catch (const std::invalid_argument& e) {
    report.violated = std::string("no split: ") + e.what();
    return report;
  }
  for (Index y : hprime) {
    Vec v = h_alg.bracket_basis(a_index, y);
    if (!v(a_index).is_zero()) {
      report.violated = "no split: [" + h_alg.label(a_index) + "," + h_alg.label(y) +
                        "] leaves the complement";
      return report;
    }
  }
  // (2) the witness applied to the complement annihilates the line.
  for (Index y : hprime) {
    if (!is_zero(g.matrix_of(y).col(a_index))) {
      report.violated = "line-annihilated: g(" + h_alg.label(y) + ")" +
                        h_alg.label(a_index) + " != 0";
      return report;
    }
  }
  // (3) the complement is invariant under the whole witness.
  for (Index x = 0; x < n; ++x) {
    for (Index y : hprime) {
      if (!g.matrix_of(x)(a_index, y).is_zero()) {
        report.violated = "complement-invariant: g(" + h_alg.label(x) + ")" +
                          h_alg.label(y) + " leaves the complement";
        return report;
      }
    }
  }
  report.reducible = true;
  return report;
}

}  // namespace lieflat
