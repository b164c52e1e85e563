#pragma once

#include "lieflat/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieflat {

/// Linear map x -> (m x m matrix), given by one matrix per basis vector of
/// the source algebra. Carries its source so a witness is self-contained.
class EndoValuedMap {
public:
  EndoValuedMap(LieAlgebra source, std::vector<Mat> mats,
                std::vector<std::string> notes = {});

  const LieAlgebra& source() const { return source_; }
  Index target_dim() const { return mats_.empty() ? 0 : mats_.front().rows(); }
  const Mat& matrix_of(Index i) const { return mats_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat>& matrices() const { return mats_; }
  Mat apply(const Vec& x) const;

  const std::vector<std::string>& notes() const { return notes_; }
  EndoValuedMap with_notes(std::vector<std::string> notes) const;

private:
  LieAlgebra source_;
  std::vector<Mat> mats_;
  std::vector<std::string> notes_;
};

/// Map into the traceless (n+1)x(n+1) matrices over the source algebra,
/// stored assembled. Blockwise, each matrix reads
///
///     [ B(x)  u(x) ]
///     [ xi(x) c(x) ]
///
/// with c(x) = -tr B(x) whenever the matrix is traceless.
class GradedHom {
public:
  GradedHom(LieAlgebra source, std::vector<Mat> assembled,
            std::vector<std::string> notes = {});

  static GradedHom from_blocks(LieAlgebra source, const std::vector<Mat>& b,
                               const std::vector<Vec>& u, const std::vector<RowVec>& xi,
                               const std::vector<Rational>& corner,
                               std::vector<std::string> notes = {});

  const LieAlgebra& source() const { return source_; }
  Index n() const { return source_.dim(); }
  const Mat& matrix_of(Index i) const { return fmats_[static_cast<std::size_t>(i)]; }
  const std::vector<Mat>& matrices() const { return fmats_; }
  Mat assemble(const Vec& x) const;

  Mat b_block(Index i) const { return matrix_of(i).topLeftCorner(n(), n()); }
  Vec u_part(Index i) const { return matrix_of(i).topRightCorner(n(), 1); }
  RowVec xi_part(Index i) const { return matrix_of(i).bottomLeftCorner(1, n()); }
  Rational corner(Index i) const { return matrix_of(i)(n(), n()); }

  const std::vector<std::string>& notes() const { return notes_; }
  GradedHom with_notes(std::vector<std::string> notes) const;

private:
  LieAlgebra source_;
  std::vector<Mat> fmats_;
  std::vector<std::string> notes_;
};

enum class WitnessKind { Ifas, PHom, NHom, ExtendedHom };

std::string witness_kind_name(WitnessKind k);

struct Counterexample {
  std::string predicate;
  Index i, j;    // offending basis pair (j may equal i for per-vector checks)
  Mat residual;  // vector residuals are n x 1
};

struct WitnessCertificate {
  WitnessKind kind;
  std::vector<std::string> checks_passed;
  std::optional<Counterexample> counterexample;
  bool ok() const { return !counterexample.has_value(); }
};

/// Torsion-free condition g(x)y - g(y)x = [x,y], checked on all basis pairs.
std::optional<Counterexample> check_star(const LieAlgebra& l, const EndoValuedMap& g);

/// Homomorphism condition g([x,y]) = [g(x), g(y)] on all basis pairs.
std::optional<Counterexample> check_endo_hom(const LieAlgebra& l, const EndoValuedMap& g);

WitnessCertificate verify_ifas(const LieAlgebra& l, const EndoValuedMap& g);

/// Residual tensors behind the two checks above. torsion(l,g)[i].col(j) is
/// g(Xi)Xj - g(Xj)Xi - [Xi,Xj]; curvature(l,g)[i][j] is
/// [g(Xi),g(Xj)] - g([Xi,Xj]).
std::vector<Mat> torsion(const LieAlgebra& l, const EndoValuedMap& g);
std::vector<std::vector<Mat>> curvature(const LieAlgebra& l, const EndoValuedMap& g);
bool torsion_is_zero(const std::vector<Mat>& t);
bool curvature_is_zero(const std::vector<std::vector<Mat>>& r);

WitnessCertificate check_p_hom(const LieAlgebra& l, const GradedHom& f);
WitnessCertificate check_n_hom(const LieAlgebra& l, const GradedHom& f);

/// Homomorphism h on an extended algebra (unit line last) with h(x)e = x for
/// every basis vector, e central.
WitnessCertificate check_extended_hom(const LieAlgebra& lext, const EndoValuedMap& h);

/// Solves the linear system asking for a degree-one element xi with
/// f'_0 - f_0 = [xi, f_{-1}], blockwise B'(Xi) - B(Xi) = -Xi (x) xi and
/// c'(Xi) - c(Xi) = xi_i. Returns the covector or nullopt when the system
/// is infeasible. Both arguments must pass check_p_hom.
std::optional<RowVec> projectively_equivalent(const GradedHom& f, const GradedHom& fprime);

/// Conjugates every assembled matrix by I + eta(xi) where eta(xi) is the
/// strictly-lower degree-one element with bottom row xi. Preserves the
/// homomorphism property and the identity translation block.
GradedHom unipotent_twist(const GradedHom& f, const RowVec& xi);

/// The unique equivalent map with all corners zero, obtained by twisting
/// with xi_i = tr B(Xi). Idempotent on maps that already have zero corners.
GradedHom normalize_to_n(const GradedHom& f);

/// Blocks from a certified torsion-free flat witness g: xi = 0, u(x) = x,
/// B(x) = g(x) - (tr g(x)/(n+1)) I, corner = -tr B(x).
GradedHom p_hom_from_ifas(const LieAlgebra& l, const EndoValuedMap& g);

/// Extends a corner-free map to the algebra with one central line added,
/// sending the new basis vector to the identity.
EndoValuedMap extended_hom_from_n(const GradedHom& f);

/// Inverse direction: restrict an extended homomorphism to the first n
/// basis vectors and remove the trace part.
GradedHom p_hom_from_extended(const EndoValuedMap& h);

/// The degree-zero block as an endomorphism of the source:
/// x -> B(x) + tr B(x) I.
EndoValuedMap connection_from(const GradedHom& f);

struct ReducibleSplit {
  Index a_index;
  std::vector<Index> hprime;
};

struct ReducibilityReport {
  bool reducible = false;
  std::string violated;  // empty when reducible
};

/// Reducibility of a witness g on h = <X_a> |x h': g(h')X_a = 0 and
/// g(h)h' in h'. The split must partition the basis, h' must be a
/// subalgebra and [X_a, h'] must stay in h'.
ReducibilityReport is_reducible(const LieAlgebra& h_alg, const EndoValuedMap& g,
                                Index a_index, const std::vector<Index>& hprime);

}  // namespace lieflat
