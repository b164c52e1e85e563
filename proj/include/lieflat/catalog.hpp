#pragma once

#include "lieflat/constructors.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lieflat {

using ParamMap = std::map<std::string, Rational>;

std::string format_params(const ParamMap& params);

enum class NamedNHom { Sl2, O3, SlnAffine2 };

GradedHom build_named_n_hom(NamedNHom which);

/// Catalog entry: a named, possibly parameterized family together with its
/// decomposition metadata and flags.
struct CatalogEntry {
  std::string name;
  Index dim = 0;
  std::vector<std::string> param_symbols;
  std::string range_text;  // human-readable constraint, e.g. "ab != 0, -1 <= a <= b <= 1"
  std::function<bool(const ParamMap&)> in_range;  // empty = no params
  std::function<LieAlgebra(const ParamMap&)> build;
  // Extra per-parameter sample points (closed range endpoints not already in
  // the base grid).
  std::map<std::string, std::vector<Rational>> extra_samples;
  // Named specializations sharing this recipe at pinned parameter values.
  std::vector<std::pair<std::string, ParamMap>> specializations;
  std::optional<GradedRecipe> decomposition;
  std::optional<ReducibleSplit> reducible_split;
  std::optional<NamedNHom> ifps_witness;
  bool perfect = false;
  std::string flags;  // nilpotent / solvable / abelian / perfect, as classified

  bool has_params() const { return !param_symbols.empty(); }
  std::vector<ParamMap> sample_grid(const std::vector<Rational>& base) const;
};

struct CertificationRow {
  std::string name;
  std::string params;  // "-" when none
  Index dim = 0;
  bool perfect = false;
  std::string ifas_status;  // certified | no-IFAS-cited | FAIL: ...
  std::string ifps_status;  // certified | via-IFAS | cited-only | FAIL: ...
  std::string witness_file = "-";
  std::optional<EndoValuedMap> ifas_witness;
  std::optional<GradedHom> ifps_witness;

  bool failed() const;
};

struct CertificationReport {
  std::vector<CertificationRow> rows;
  bool all_ok() const;
};

/// Default per-parameter sample values; closed endpoints are added per entry.
const std::vector<Rational>& default_sample_values();

class Catalog {
public:
  Catalog();

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// Resolves a family name, a specialization name (A_3_3, ...) or an alias
  /// (sl2, o3). Returns the entry and the pinned parameters, if any.
  const CatalogEntry* find(const std::string& name, ParamMap* pinned = nullptr) const;

  LieAlgebra lookup(const std::string& name, const ParamMap& params = {}) const;

  /// Decomposition metadata for a non-perfect entry, from the entry itself
  /// or the built-in table of classification rows. Throws for perfect
  /// entries and unknown names.
  GradedRecipe decomposition_for(const std::string& name) const;

  /// Ingests entries from a structure-constants file. Entries must pass the
  /// Jacobi check; a name collision is accepted only when the constants
  /// agree with the existing entry.
  std::vector<std::string> load_entries(const std::string& path);

  /// Sweeps every entry with dim in [dim_lo, dim_hi] over its sample grid:
  /// Jacobi, perfectness, then either a certified witness through the
  /// decomposition metadata or the attached corner-free map.
  CertificationReport certify_all(Index dim_lo, Index dim_hi,
                                  const std::vector<Rational>& grid_override = {}) const;

private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, GradedRecipe> table_rows_;  // decomposition-only metadata
  std::map<std::string, std::string> aliases_;
};

void save_report(const CertificationReport& report, const std::string& path);
void write_report(const CertificationReport& report, std::ostream& os);

/// Natural ordering used for report rows: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace lieflat
