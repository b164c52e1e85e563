#include "lieflat/commands.hpp"

#include "lieflat/formats.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace lieflat {

namespace {

struct ResolvedAlgebra {
  LieAlgebra algebra;
  std::optional<GradedDecomposition> decomposition;
};

ResolvedAlgebra resolve_algebra(const Catalog& catalog, const std::string& spec,
                                const ParamMap& params) {
  if (std::filesystem::exists(spec)) {
    AlgebraEntry entry = parse_single_algebra_file(spec);
    return {std::move(entry.algebra), std::move(entry.decomposition)};
  }
  return {catalog.lookup(spec, params), std::nullopt};
}

void print_notes(const std::vector<std::string>& notes, std::ostream& out) {
  for (const std::string& n : notes) out << "note: " << n << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

void write_witness_file(const std::string& path, const std::string& kind,
                        const EndoValuedMap& w) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  write_witness(os, kind, w.source().name(), w.matrices(), w.notes());
}

void write_witness_file(const std::string& path, const std::string& kind, const GradedHom& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  write_witness(os, kind, f.source().name(), f.matrices(), f.notes());
}

void write_algebra_file(const std::string& path, const LieAlgebra& l,
                        const std::optional<GradedDecomposition>& d = std::nullopt) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write '" + path + "'");
  write_algebra(os, l, d);
}

// A corner-free verified map for a catalog entry: the attached one on
// perfect entries, otherwise derived from the entry's flat witness.
GradedHom n_hom_for_entry(const Catalog& catalog, const CatalogEntry& entry,
                          const LieAlgebra& l) {
  if (entry.ifps_witness) {
    GradedHom f = build_named_n_hom(*entry.ifps_witness);
    if (!f.source().same_structure(l)) {
      throw std::invalid_argument("attached witness does not match " + entry.name);
    }
    return GradedHom(l, f.matrices(), f.notes());
  }
  AutoIfasMetadata meta;
  meta.indecomposable = catalog.decomposition_for(entry.name);
  AutoIfasResult r = auto_ifas(l, meta);
  if (!r.witness) throw std::invalid_argument("no witness available for " + entry.name);
  return normalize_to_n(p_hom_from_ifas(l, *r.witness));
}

EndoValuedMap ifas_for_entry(const Catalog& catalog, const CatalogEntry& entry,
                             const LieAlgebra& l) {
  AutoIfasMetadata meta;
  meta.indecomposable = catalog.decomposition_for(entry.name);
  AutoIfasResult r = auto_ifas(l, meta);
  if (!r.witness) {
    throw std::invalid_argument(entry.name + ": " + r.cited.value_or("no witness"));
  }
  return *r.witness;
}

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

}  // namespace

int cmd_jacobi(const std::string& file, std::ostream& out, std::ostream& err) {
  std::optional<AlgebraEntry> entry;
  try {
    entry = parse_single_algebra_file(file);
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  const JacobiReport report = check_jacobi(entry->algebra);
  if (report.ok()) {
    out << "PASS\n";
    return 0;
  }
  for (const JacobiViolation& v : report.violations) {
    out << "FAIL jacobi at (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1
        << "): residual " << format_vector(v.residual) << "\n";
  }
  return 1;
}

int cmd_verify(const std::string& algebra_spec, const std::string& witness_file,
               const CmdOptions& opts, std::ostream& out, std::ostream& err) {
  Catalog catalog;
  try {
    const ResolvedAlgebra resolved = resolve_algebra(catalog, algebra_spec, opts.params);
    const LieAlgebra& l = resolved.algebra;
    const WitnessFile wf = parse_witness_file(witness_file);
    const std::string kind = opts.kind.empty() ? wf.kind : opts.kind;

    WitnessCertificate cert;
    if (kind == "ifas" || kind == "extended") {
      if (wf.m != l.dim() || static_cast<Index>(wf.maps.size()) != l.dim()) {
        return usage_error(err, "witness shape does not match a dim-" +
                                    std::to_string(l.dim()) + " algebra");
      }
      const EndoValuedMap g(l, wf.maps);
      cert = kind == "ifas" ? verify_ifas(l, g) : check_extended_hom(l, g);
    } else if (kind == "phom" || kind == "nhom") {
      if (wf.m != l.dim() + 1 || static_cast<Index>(wf.maps.size()) != l.dim()) {
        return usage_error(err, "graded witness shape does not match a dim-" +
                                    std::to_string(l.dim()) + " algebra");
      }
      const GradedHom f(l, wf.maps);
      cert = kind == "phom" ? check_p_hom(l, f) : check_n_hom(l, f);
    } else {
      return usage_error(err, "unknown kind '" + kind + "'");
    }
    out << format_certificate(cert) << "\n";
    if (opts.explain) {
      for (const std::string& check : cert.checks_passed) out << "check: " << check << "\n";
    }
    return cert.ok() ? 0 : 1;
  } catch (const ParseError& e) {
    return usage_error(err, e.what());
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

namespace {

struct ConstructOutput {
  std::string kind;
  std::optional<EndoValuedMap> endo;
  std::optional<GradedHom> graded;
  std::optional<LieAlgebra> companion_algebra;  // written when not in the catalog
  std::optional<std::string> cited;

  const LieAlgebra& source() const {
    return endo ? endo->source() : graded->source();
  }
};

ConstructOutput run_constructor(Catalog& catalog, const std::string& target,
                                const std::string& ctor, const CmdOptions& opts) {
  ConstructOutput result;
  if (target == "t" || target == "slaff") {
    long n = 0;
    try {
      n = std::stol(ctor);
    } catch (...) {
      throw std::invalid_argument("expected a size: " + target + " <n>");
    }
    if (target == "t") {
      UpperTriangularResult t = upper_triangular_ifas(static_cast<Index>(n));
      result.kind = "ifas";
      result.endo = std::move(t.witness);
      result.companion_algebra = std::move(t.algebra);
    } else {
      GradedHom f = sln_affine_n_hom(static_cast<Index>(n));
      result.kind = "nhom";
      result.companion_algebra = f.source();
      result.graded = std::move(f);
    }
    return result;
  }

  const std::vector<std::string> names = split(target, '+');
  if (names.size() == 1) {
    const CatalogEntry* entry = catalog.find(target);
    if (!entry) throw std::runtime_error("unknown catalog entry '" + target + "'");
    const LieAlgebra l = catalog.lookup(target, opts.params);
    if (ctor == "auto") {
      if (entry->perfect) {
        AutoIfasResult r = auto_ifas(l, {});
        result.cited = l.name() + ": " + *r.cited;
        return result;
      }
      AutoIfasMetadata meta;
      meta.indecomposable = catalog.decomposition_for(target);
      result.kind = "ifas";
      result.endo = *auto_ifas(l, meta).witness;
    } else if (ctor == "graded") {
      result.kind = "ifas";
      result.endo = graded_ifas(l, catalog.decomposition_for(target).decomposition);
    } else if (ctor == "semidirect") {
      result.kind = "ifas";
      result.endo = ifas_from_recipe(l, catalog.decomposition_for(target));
    } else if (ctor == "nhom") {
      result.kind = "nhom";
      result.graded = n_hom_for_entry(catalog, *entry, l);
    } else if (ctor == "extend") {
      result.kind = "ifas";
      result.endo = ifps_to_ifas_extension(n_hom_for_entry(catalog, *entry, l));
      result.companion_algebra = result.endo->source();
    } else {
      throw std::runtime_error("unknown constructor '" + ctor + "' for a single entry");
    }
    return result;
  }

  // Composite target l1+l2+...
  std::vector<const CatalogEntry*> parts;
  std::vector<LieAlgebra> algebras;
  for (const std::string& n : names) {
    const CatalogEntry* entry = catalog.find(n);
    if (!entry) throw std::runtime_error("unknown catalog entry '" + n + "'");
    parts.push_back(entry);
    algebras.push_back(catalog.lookup(n));
  }
  if (ctor == "direct-sum" || ctor == "auto") {
    AutoIfasMetadata meta;
    LieAlgebra sum = algebras.front();
    for (std::size_t i = 1; i < algebras.size(); ++i) sum = direct_sum(sum, algebras[i]);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      AutoIfasFactor factor{algebras[i], std::nullopt, std::nullopt, std::nullopt};
      if (parts[i]->perfect) {
        factor.ifps_witness = n_hom_for_entry(catalog, *parts[i], algebras[i]);
      } else {
        factor.ifas_witness = ifas_for_entry(catalog, *parts[i], algebras[i]);
        factor.reducible_split = parts[i]->reducible_split;
      }
      meta.factors.push_back(std::move(factor));
    }
    AutoIfasResult r = auto_ifas(sum, meta);
    if (!r.witness) {
      result.cited = sum.name() + ": " + *r.cited;
      return result;
    }
    result.kind = "ifas";
    result.endo = std::move(r.witness);
    result.companion_algebra = result.endo->source();
  } else if (ctor == "reducible-sum") {
    if (names.size() < 2) throw std::invalid_argument("reducible-sum needs two factors");
    GradedHom f = n_hom_for_entry(catalog, *parts[0], algebras[0]);
    if (!parts[1]->reducible_split) {
      throw std::invalid_argument(parts[1]->name + " has no reducible split on record");
    }
    EndoValuedMap g = ifas_for_entry(catalog, *parts[1], algebras[1]);
    EndoValuedMap acc = reducible_sum_ifas(f, algebras[1], g,
                                           parts[1]->reducible_split->a_index,
                                           parts[1]->reducible_split->hprime);
    for (std::size_t i = 2; i < parts.size(); ++i) {
      acc = direct_sum_ifas(acc, ifas_for_entry(catalog, *parts[i], algebras[i]));
    }
    result.kind = "ifas";
    result.endo = std::move(acc);
    result.companion_algebra = result.endo->source();
  } else if (ctor == "sum-plus-line") {
    if (names.size() != 2) throw std::invalid_argument("sum-plus-line joins exactly two factors");
    GradedHom f1 = n_hom_for_entry(catalog, *parts[0], algebras[0]);
    GradedHom f2 = n_hom_for_entry(catalog, *parts[1], algebras[1]);
    GradedHom joined = direct_sum_plus_line_ifps(f1, f2);
    result.kind = "phom";
    result.companion_algebra = joined.source();
    result.graded = std::move(joined);
  } else {
    throw std::runtime_error("unknown constructor '" + ctor + "' for a composite");
  }
  return result;
}

}  // namespace

int cmd_construct(const std::string& target, const std::string& ctor, const CmdOptions& opts,
                  std::ostream& out, std::ostream& err) {
  Catalog catalog;
  ConstructOutput result;
  try {
    result = run_constructor(catalog, target, ctor, opts);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }

  if (result.cited) {
    out << "no-IFAS-cited: " << *result.cited << "\n";
    return 0;
  }

  WitnessCertificate cert;
  if (result.endo) {
    cert = verify_ifas(result.endo->source(), *result.endo);
  } else if (result.kind == "nhom") {
    cert = check_n_hom(result.graded->source(), *result.graded);
  } else {
    cert = check_p_hom(result.graded->source(), *result.graded);
  }
  out << format_certificate(cert) << "\n";
  if (opts.explain) {
    print_notes(result.endo ? result.endo->notes() : result.graded->notes(), out);
  }

  try {
    if (!opts.out.empty()) {
      if (result.endo) {
        write_witness_file(opts.out, result.kind, *result.endo);
      } else {
        write_witness_file(opts.out, result.kind, *result.graded);
      }
      out << "witness: " << opts.out << "\n";
      if (result.companion_algebra) {
        write_algebra_file(opts.out + ".alg", *result.companion_algebra);
        out << "algebra: " << opts.out << ".alg\n";
      }
    } else if (result.endo) {
      write_witness(out, result.kind, result.endo->source().name(), result.endo->matrices(),
                    result.endo->notes());
    } else {
      write_witness(out, result.kind, result.graded->source().name(),
                    result.graded->matrices(), result.graded->notes());
    }
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
  return cert.ok() ? 0 : 1;
}

int cmd_normalize(const std::string& witness_file, const CmdOptions& opts, std::ostream& out,
                  std::ostream& err) {
  Catalog catalog;
  try {
    const WitnessFile wf = parse_witness_file(witness_file);
    if (wf.kind != "phom" && wf.kind != "nhom") {
      return usage_error(err, "normalize expects a phom or nhom witness");
    }
    const std::string algebra_spec = opts.algebra.empty() ? wf.algebra_name : opts.algebra;
    const ResolvedAlgebra resolved = resolve_algebra(catalog, algebra_spec, opts.params);
    const LieAlgebra& l = resolved.algebra;
    if (wf.m != l.dim() + 1 || static_cast<Index>(wf.maps.size()) != l.dim()) {
      return usage_error(err, "graded witness shape does not match the algebra");
    }
    GradedHom f(l, wf.maps);
    GradedHom normalized = normalize_to_n(f);
    if (!opts.out.empty()) {
      write_witness_file(opts.out, "nhom", normalized);
      out << "witness: " << opts.out << "\n";
    } else {
      write_witness(out, "nhom", l.name(), normalized.matrices());
    }
    return 0;
  } catch (const ParseError& e) {
    return usage_error(err, e.what());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_certify(const std::string& range, const CmdOptions& opts, std::ostream& out,
                std::ostream& err) {
  Index lo = 0, hi = 0;
  {
    const auto sep = range.find("..");
    try {
      if (sep == std::string::npos) {
        lo = hi = static_cast<Index>(std::stol(range));
      } else {
        lo = static_cast<Index>(std::stol(range.substr(0, sep)));
        hi = static_cast<Index>(std::stol(range.substr(sep + 2)));
      }
    } catch (...) {
      return usage_error(err, "bad dimension range '" + range + "' (expected lo..hi)");
    }
  }
  Catalog catalog;
  try {
    if (!opts.entries_file.empty()) catalog.load_entries(opts.entries_file);
    CertificationReport report = catalog.certify_all(lo, hi, opts.grid);

    if (!opts.witness_dir.empty()) {
      std::filesystem::create_directories(opts.witness_dir);
      for (std::size_t i = 0; i < report.rows.size(); ++i) {
        CertificationRow& row = report.rows[i];
        if (!row.ifas_witness && !row.ifps_witness) continue;
        std::ostringstream base;
        base << opts.witness_dir << "/w" << std::setw(3) << std::setfill('0') << i << "_"
             << row.name;
        if (row.ifas_witness) {
          write_witness_file(base.str() + ".wit", "ifas", *row.ifas_witness);
          write_algebra_file(base.str() + ".alg", row.ifas_witness->source());
        } else {
          write_witness_file(base.str() + ".wit", "nhom", *row.ifps_witness);
          write_algebra_file(base.str() + ".alg", row.ifps_witness->source());
        }
        row.witness_file = base.str() + ".wit";
      }
    }

    write_report(report, out);
    if (!opts.out.empty()) save_report(report, opts.out);
    return report.all_ok() ? 0 : 1;
  } catch (const std::exception& e) {
    return usage_error(err, e.what());
  }
}

int cmd_catalog_list(std::ostream& out, std::ostream& err) {
  (void)err;
  Catalog catalog;
  for (const CatalogEntry& e : catalog.entries()) {
    out << e.name << "\tdim " << e.dim;
    if (e.has_params()) {
      out << "\tparams";
      for (const auto& s : e.param_symbols) out << " " << s;
      out << " (" << e.range_text << ")";
    }
    if (!e.flags.empty()) out << "\t" << e.flags;
    if (!e.specializations.empty()) {
      out << "\tincludes";
      for (const auto& [n, p] : e.specializations) out << " " << n << "[" << format_params(p) << "]";
    }
    out << "\n";
  }
  return 0;
}

int cmd_catalog_show(const std::string& name, std::ostream& out, std::ostream& err) {
  Catalog catalog;
  ParamMap pinned;
  const CatalogEntry* entry = catalog.find(name, &pinned);
  if (!entry) return usage_error(err, "unknown catalog entry '" + name + "'");
  out << "name: " << entry->name << "\n";
  out << "dim: " << entry->dim << "\n";
  if (entry->has_params()) out << "range: " << entry->range_text << "\n";
  out << "flags: " << (entry->flags.empty() ? "-" : entry->flags) << "\n";
  if (!entry->has_params()) {
    std::optional<GradedDecomposition> d;
    if (entry->decomposition) d = entry->decomposition->decomposition;
    write_algebra(out, entry->build({}).renamed(entry->name), d);
  } else {
    out << "samples:";
    for (const ParamMap& p : entry->sample_grid(default_sample_values())) {
      out << " " << format_params(p);
    }
    out << "\n";
  }
  return 0;
}

}  // namespace lieflat
