#pragma once

#include "lieflat/flat_structures.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieflat {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& origin, int line, const std::string& message)
      : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message) {}
};

/// One block of the structure-constants text format:
///   algebra <name> <dim>
///   c <i> <j> <k> <p/q>     ([Xi,Xj] contains (p/q) Xk, i < j, 1-based)
///   h <i...>   k<m> <i...>   z <i...>   (optional decomposition lines)
/// Unlisted brackets are zero; '#' starts a comment.
struct AlgebraEntry {
  LieAlgebra algebra;
  std::optional<GradedDecomposition> decomposition;
};

std::vector<AlgebraEntry> parse_algebra_entries(std::istream& in, const std::string& origin);
std::vector<AlgebraEntry> parse_algebra_file(const std::string& path);
AlgebraEntry parse_single_algebra_file(const std::string& path);

void write_algebra(std::ostream& os, const LieAlgebra& l,
                   const std::optional<GradedDecomposition>& d = std::nullopt);

/// Witness text format:
///   witness <kind> <algebra-name> <m>
///   map <i>
///   <m rows of m rationals>
/// kind is one of ifas, phom, nhom, extended. Graded maps are serialized as
/// their assembled (n+1) x (n+1) matrices.
struct WitnessFile {
  std::string kind;
  std::string algebra_name;
  Index m = 0;
  std::vector<Mat> maps;
};

WitnessFile parse_witness_file(const std::string& path);
WitnessFile parse_witness_text(std::istream& in, const std::string& origin);

void write_witness(std::ostream& os, const std::string& kind, const std::string& algebra_name,
                   const std::vector<Mat>& maps, const std::vector<std::string>& notes = {});

std::string format_certificate(const WitnessCertificate& cert);
std::string format_vector(const Vec& v);

}  // namespace lieflat
