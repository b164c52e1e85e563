#pragma once

#include "lieflat/flat_structures.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lieflat {

bool is_abelian(const LieAlgebra& l);

/// The zero witness, valid exactly on abelian algebras.
EndoValuedMap zero_ifas(const LieAlgebra& l);

/// Witness on a graded algebra (empty h): g(x)y = (j/(i+j)) [x,y] for
/// x in layer i, y in layer j, and zero whenever either argument lies in
/// the central part. Certified before being returned.
EndoValuedMap graded_ifas(const LieAlgebra& k, const GradedDecomposition& d);

/// Blockwise witness on l = h |x k: the supplied base witness on h x h,
/// the layer map on k x k, the adjoint action on h x k and zero on k x h.
EndoValuedMap semidirect_ifas(const LieAlgebra& l, const GradedDecomposition& d,
                              const EndoValuedMap& g_h);

/// Block-diagonal join of two certified witnesses on the direct sum.
EndoValuedMap direct_sum_ifas(const EndoValuedMap& g1, const EndoValuedMap& g2);

/// Corner-free join: extends both maps by a unit line, forms the
/// block-diagonal map, rebases onto the subalgebra of pairs whose two unit
/// coordinates are opposite, with the diagonal line (e1, e2) as the new
/// unit. Output lives on l1 (+) l2 (+) a1 and passes the degree checks.
GradedHom direct_sum_plus_line_ifps(const GradedHom& f1, const GradedHom& f2);

/// Witness on l (+) h from a corner-free map on l and a reducible witness
/// on h = <X_a> |x h': the extension of f occupies l and the line of X_a
/// (which plays the unit), X_a additionally acts on h' by the bracket, and
/// h' keeps its own restricted witness.
EndoValuedMap reducible_sum_ifas(const GradedHom& f, const LieAlgebra& h_alg,
                                 const EndoValuedMap& g, Index a_index,
                                 const std::vector<Index>& hprime);

LieAlgebra sl2_algebra();
LieAlgebra o3_algebra();

/// The fixed corner-free witnesses on sl(2,R) and o(3), entered as literal
/// matrices over the standard bases.
GradedHom sl2_n_hom();
GradedHom o3_n_hom();

/// sl(n,R) |x R^n as a matrix algebra in the basis
/// (lower E_ij | H_i = E_ii - E_{i+1,i+1} | upper E_ij | v_i).
LieAlgebra sln_affine_algebra(Index n);

/// Corner-free witness on sl(n,R) |x R^n built from the n-fold sum of the
/// contragredient of the standard representation, identified with the
/// algebra plus a unit line through x -> f~(x) v, v = [I_n; 0].
GradedHom sln_affine_n_hom(Index n);

/// Extension of a corner-free map to a certified witness on l (+) a1.
EndoValuedMap ifps_to_ifas_extension(const GradedHom& f);

struct UpperTriangularResult {
  LieAlgebra algebra;
  EndoValuedMap witness;
  ReducibleSplit split;  // line spanned by the identity matrix
};

/// The upper triangular matrices t(n,R) with basis (I_n, E_22..E_nn,
/// superdiagonal layers), their graded witness, and the reducibility split
/// along the identity line.
UpperTriangularResult upper_triangular_ifas(Index n);

/// Recipe for building a witness on an algebra with a given decomposition;
/// h_block describes the base block (in local indices) when it is not
/// abelian.
struct GradedRecipe {
  GradedDecomposition decomposition;
  std::shared_ptr<const GradedRecipe> h_block;
};

EndoValuedMap ifas_from_recipe(const LieAlgebra& l, const GradedRecipe& recipe);

struct AutoIfasFactor {
  LieAlgebra algebra;
  std::optional<EndoValuedMap> ifas_witness;
  std::optional<ReducibleSplit> reducible_split;
  std::optional<GradedHom> ifps_witness;  // corner-free map for factors without a witness
};

struct AutoIfasMetadata {
  std::optional<GradedRecipe> indecomposable;
  std::vector<AutoIfasFactor> factors;  // in basis order of the direct sum
};

struct AutoIfasResult {
  std::optional<EndoValuedMap> witness;
  std::optional<std::string> cited;  // set instead of a witness on perfect algebras
};

/// Decision tree over the supplied metadata: perfect algebras are reported
/// as having no witness (a cited non-existence result, never recomputed);
/// indecomposable algebras go through their recipe; direct sums fold the
/// factor witnesses, routing one corner-free factor through the reducible
/// join when needed. Every returned witness is re-certified.
AutoIfasResult auto_ifas(const LieAlgebra& l, const AutoIfasMetadata& meta);

}  // namespace lieflat
