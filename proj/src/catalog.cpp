#include "lieflat/catalog.hpp"

#include "lieflat/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace lieflat {

std::string format_params(const ParamMap& params) {
  if (params.empty()) return "-";
  std::string out;
  for (const auto& [key, value] : params) {
    if (!out.empty()) out += ",";
    out += key + "=" + value.str();
  }
  return out;
}

GradedHom build_named_n_hom(NamedNHom which) {
  switch (which) {
    case NamedNHom::Sl2: return sl2_n_hom();
    case NamedNHom::O3: return o3_n_hom();
    case NamedNHom::SlnAffine2: return sln_affine_n_hom(2);
  }
  throw std::logic_error("unreachable");
}

const std::vector<Rational>& default_sample_values() {
  static const std::vector<Rational> values = {
      Rational(-1), Rational(-1, 2), Rational(-1, 3),
      Rational(1, 3), Rational(1, 2), Rational(1)};
  return values;
}

std::vector<ParamMap> CatalogEntry::sample_grid(const std::vector<Rational>& base) const {
  if (!has_params()) return {ParamMap{}};
  std::vector<std::vector<Rational>> per_param;
  for (const std::string& sym : param_symbols) {
    std::vector<Rational> values = base;
    auto extra = extra_samples.find(sym);
    if (extra != extra_samples.end()) {
      for (const Rational& v : extra->second) {
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
      }
    }
    per_param.push_back(std::move(values));
  }
  std::vector<ParamMap> grid;
  std::vector<std::size_t> cursor(per_param.size(), 0);
  while (true) {
    ParamMap p;
    for (std::size_t i = 0; i < per_param.size(); ++i) {
      p[param_symbols[i]] = per_param[i][cursor[i]];
    }
    if (!in_range || in_range(p)) grid.push_back(std::move(p));
    std::size_t i = 0;
    for (; i < cursor.size(); ++i) {
      if (++cursor[i] < per_param[i].size()) break;
      cursor[i] = 0;
    }
    if (i == cursor.size()) break;
  }
  return grid;
}

bool CertificationRow::failed() const {
  return ifas_status.rfind("FAIL", 0) == 0 || ifps_status.rfind("FAIL", 0) == 0;
}

bool CertificationReport::all_ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const CertificationRow& r) { return r.failed(); });
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    const bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string na = a.substr(i, ie - i), nb = b.substr(j, je - j);
      const std::string ta = na.substr(na.find_first_not_of('0') == std::string::npos
                                           ? na.size() - 1
                                           : na.find_first_not_of('0'));
      const std::string tb = nb.substr(nb.find_first_not_of('0') == std::string::npos
                                           ? nb.size() - 1
                                           : nb.find_first_not_of('0'));
      if (ta.size() != tb.size()) return ta.size() < tb.size();
      if (ta != tb) return ta < tb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

namespace {

using Term = LieAlgebra::BracketTerm;

// 1-based bracket term, matching the printed classification lists.
Term t(Index i, Index j, Index k, Rational c) { return {i - 1, j - 1, k - 1, std::move(c)}; }

GradedDecomposition dec(std::vector<Index> h, std::vector<std::vector<Index>> layers,
                        std::vector<Index> z) {
  GradedDecomposition d;
  d.h = std::move(h);
  d.layers = std::move(layers);
  d.zprime = std::move(z);
  return d;
}

GradedRecipe recipe(GradedDecomposition d,
                    std::shared_ptr<const GradedRecipe> nested = nullptr) {
  return GradedRecipe{std::move(d), std::move(nested)};
}

std::shared_ptr<const GradedRecipe> nested(GradedDecomposition d) {
  return std::make_shared<const GradedRecipe>(GradedRecipe{std::move(d), nullptr});
}

Rational param(const ParamMap& p, const std::string& sym) {
  auto it = p.find(sym);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + sym + "'");
  return it->second;
}

const Rational one(1);

}  // namespace

Catalog::Catalog() {
  auto fixed = [](Index dim, std::vector<Term> terms, std::vector<std::string> labels = {}) {
    return [dim, terms = std::move(terms), labels = std::move(labels)](const ParamMap&) {
      return LieAlgebra(dim, terms, "", labels);
    };
  };

  {
    CatalogEntry e;
    e.name = "A_1_1";
    e.dim = 1;
    e.build = fixed(1, {});
    e.decomposition = recipe(dec({}, {}, {0}));
    e.reducible_split = ReducibleSplit{0, {}};
    e.flags = "abelian";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_2_1";
    e.dim = 2;
    e.build = fixed(2, {t(1, 2, 2, one)});
    e.decomposition = recipe(dec({0}, {}, {1}));
    e.reducible_split = ReducibleSplit{0, {1}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_1";
    e.dim = 3;
    e.build = fixed(3, {t(1, 2, 3, one)});
    e.decomposition = recipe(dec({0}, {}, {1, 2}));
    e.reducible_split = ReducibleSplit{0, {1, 2}};
    e.flags = "nilpotent";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_2";
    e.dim = 3;
    e.build = fixed(3, {t(1, 2, 2, one), t(1, 2, 3, one), t(1, 3, 3, one)});
    e.decomposition = recipe(dec({0}, {}, {1, 2}));
    e.reducible_split = ReducibleSplit{0, {1, 2}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_5";
    e.dim = 3;
    e.param_symbols = {"a"};
    e.range_text = "0 < |a| <= 1";
    e.in_range = [](const ParamMap& p) {
      const Rational a = param(p, "a");
      return !a.is_zero() && abs(a) <= one;
    };
    e.build = [](const ParamMap& p) {
      return LieAlgebra(3, {t(1, 2, 2, param(p, "a")), t(1, 3, 3, one)});
    };
    e.specializations = {{"A_3_3", {{"a", Rational(1)}}}, {"A_3_4", {{"a", Rational(-1)}}}};
    e.decomposition = recipe(dec({0}, {}, {1, 2}));
    e.reducible_split = ReducibleSplit{0, {1, 2}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_7";
    e.dim = 3;
    e.param_symbols = {"a"};
    e.range_text = "a >= 0";
    e.in_range = [](const ParamMap& p) { return param(p, "a") >= Rational(0); };
    e.extra_samples = {{"a", {Rational(0)}}};
    e.build = [](const ParamMap& p) {
      const Rational a = param(p, "a");
      return LieAlgebra(3, {t(1, 2, 2, a), t(1, 2, 3, one), t(1, 3, 2, -one), t(1, 3, 3, a)});
    };
    e.specializations = {{"A_3_6", {{"a", Rational(0)}}}};
    e.decomposition = recipe(dec({0}, {}, {1, 2}));
    e.reducible_split = ReducibleSplit{0, {1, 2}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_8";
    e.dim = 3;
    e.build = [](const ParamMap&) { return sl2_algebra().renamed(""); };
    e.perfect = true;
    e.ifps_witness = NamedNHom::Sl2;
    e.flags = "perfect";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_3_9";
    e.dim = 3;
    e.build = [](const ParamMap&) { return o3_algebra().renamed(""); };
    e.perfect = true;
    e.ifps_witness = NamedNHom::O3;
    e.flags = "perfect";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_1";
    e.dim = 4;
    e.build = fixed(4, {t(1, 2, 3, one), t(1, 3, 4, one)});
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "nilpotent";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_2";
    e.dim = 4;
    e.param_symbols = {"a"};
    e.range_text = "a != 0";
    e.in_range = [](const ParamMap& p) { return !param(p, "a").is_zero(); };
    e.build = [](const ParamMap& p) {
      return LieAlgebra(4, {t(1, 2, 2, one), t(1, 2, 3, one), t(1, 3, 3, one),
                            t(1, 4, 4, param(p, "a"))});
    };
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_3";
    e.dim = 4;
    e.build = fixed(4, {t(1, 2, 3, one), t(1, 4, 4, one)});
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_4";
    e.dim = 4;
    e.build = fixed(4, {t(1, 2, 2, one), t(1, 2, 3, one), t(1, 3, 3, one), t(1, 3, 4, one),
                        t(1, 4, 4, one)});
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_5";
    e.dim = 4;
    e.param_symbols = {"a", "b"};
    e.range_text = "ab != 0, -1 <= a <= b <= 1";
    e.in_range = [](const ParamMap& p) {
      const Rational a = param(p, "a");
      const Rational b = param(p, "b");
      return !a.is_zero() && !b.is_zero() && Rational(-1) <= a && a <= b && b <= one;
    };
    e.build = [](const ParamMap& p) {
      return LieAlgebra(4, {t(1, 2, 2, param(p, "b")), t(1, 3, 3, param(p, "a")),
                            t(1, 4, 4, one)});
    };
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_6";
    e.dim = 4;
    e.param_symbols = {"a", "b"};
    e.range_text = "a != 0, b >= 0";
    e.in_range = [](const ParamMap& p) {
      return !param(p, "a").is_zero() && param(p, "b") >= Rational(0);
    };
    e.extra_samples = {{"b", {Rational(0)}}};
    e.build = [](const ParamMap& p) {
      return LieAlgebra(4, {t(1, 2, 2, Rational(2)), t(1, 2, 3, one), t(1, 3, 2, -one),
                            t(1, 3, 3, param(p, "b")), t(1, 4, 4, param(p, "a"))});
    };
    e.decomposition = recipe(dec({0}, {}, {1, 2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_7";
    e.dim = 4;
    e.build = fixed(4, {t(1, 2, 2, one), t(1, 2, 3, one), t(1, 3, 3, one),
                        t(1, 4, 4, Rational(2)), t(2, 3, 4, -one)});
    e.decomposition = recipe(dec({0}, {{1, 2}}, {3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_9";
    e.dim = 4;
    e.param_symbols = {"b"};
    e.range_text = "-1 <= b <= 1";
    e.in_range = [](const ParamMap& p) {
      const Rational b = param(p, "b");
      return Rational(-1) <= b && b <= one;
    };
    e.build = [](const ParamMap& p) {
      const Rational b = param(p, "b");
      return LieAlgebra(4, {t(1, 2, 2, b), t(1, 3, 3, one), t(1, 4, 4, one + b),
                            t(2, 3, 4, -one)});
    };
    e.specializations = {{"A_4_8", {{"b", Rational(-1)}}}};
    e.decomposition = recipe(dec({0}, {{1, 2}}, {3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_11";
    e.dim = 4;
    e.param_symbols = {"a"};
    e.range_text = "a >= 0";
    e.in_range = [](const ParamMap& p) { return param(p, "a") >= Rational(0); };
    e.extra_samples = {{"a", {Rational(0)}}};
    e.build = [](const ParamMap& p) {
      const Rational a = param(p, "a");
      return LieAlgebra(4, {t(1, 2, 2, a), t(1, 2, 3, one), t(1, 3, 2, -one), t(1, 3, 3, a),
                            t(1, 4, 4, Rational(2) * a), t(2, 3, 4, -one)});
    };
    e.specializations = {{"A_4_10", {{"a", Rational(0)}}}};
    e.decomposition = recipe(dec({0}, {{1, 2}}, {3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_4_12";
    e.dim = 4;
    e.build = fixed(4, {t(1, 3, 4, one), t(1, 4, 3, -one), t(2, 3, 3, -one),
                        t(2, 4, 4, -one)});
    e.decomposition = recipe(dec({0, 1}, {}, {2, 3}));
    e.reducible_split = ReducibleSplit{0, {1, 2, 3}};
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_5_39";
    e.dim = 5;
    e.build = fixed(5, {t(1, 2, 3, -one), t(1, 4, 5, -one), t(1, 5, 4, one),
                        t(2, 4, 4, -one), t(2, 5, 5, -one)});
    e.decomposition = recipe(dec({0, 1, 2}, {}, {3, 4}), nested(dec({}, {{0, 1}}, {2})));
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "A_5_40";
    e.dim = 5;
    e.build = fixed(5,
                    {t(1, 2, 1, Rational(2)), t(1, 3, 2, -one), t(2, 3, 3, Rational(2)),
                     t(1, 4, 5, one), t(2, 4, 4, one), t(2, 5, 5, -one), t(3, 5, 4, one)},
                    {"e1", "e2", "e3", "e4", "e5"});
    e.perfect = true;
    e.ifps_witness = NamedNHom::SlnAffine2;
    e.flags = "perfect";
    entries_.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.name = "n6_20_1";
    e.dim = 6;
    e.build = fixed(6,
                    {t(1, 3, 3, one), t(1, 5, 2, one), t(1, 6, 5, one), t(4, 6, 2, one),
                     t(5, 6, 4, one)},
                    {"e1", "e2", "e3", "e4", "e5", "e6"});
    e.decomposition = recipe(dec({0, 2}, {{4, 5}, {3}}, {1}), nested(dec({0}, {}, {1})));
    e.flags = "solvable";
    entries_.push_back(std::move(e));
  }

  for (auto& e : entries_) {
    if (!e.in_range) e.in_range = [](const ParamMap&) { return true; };
  }

  // Classification rows whose structure constants are not built in; ingested
  // entries with these names pick up their decomposition metadata here.
  const GradedRecipe flat5 = recipe(dec({0}, {}, {1, 2, 3, 4}));
  for (const char* n : {"A_5_1", "A_5_2", "A_5_7", "A_5_8", "A_5_9", "A_5_10", "A_5_11",
                        "A_5_12", "A_5_13", "A_5_14", "A_5_15", "A_5_16", "A_5_17", "A_5_18"}) {
    table_rows_.emplace(n, flat5);
  }
  const GradedRecipe three_layers = recipe(dec({0}, {{1, 2}, {3}}, {4}));
  for (const char* n : {"A_5_3", "A_5_4", "A_5_30", "A_5_31"}) {
    table_rows_.emplace(n, three_layers);
  }
  const GradedRecipe two_layers = recipe(dec({0}, {{1, 2, 3}}, {4}));
  for (const char* n : {"A_5_5", "A_5_6", "A_5_19", "A_5_20", "A_5_21", "A_5_22", "A_5_23",
                        "A_5_24", "A_5_25", "A_5_26", "A_5_27", "A_5_28", "A_5_29"}) {
    table_rows_.emplace(n, two_layers);
  }
  const GradedRecipe plane_base = recipe(dec({0, 1}, {{2, 3}}, {4}));
  for (const char* n : {"A_5_32", "A_5_33", "A_5_34", "A_5_35", "A_5_36", "A_5_37"}) {
    table_rows_.emplace(n, plane_base);
  }
  table_rows_.emplace("A_5_38",
                      recipe(dec({0, 1, 2}, {}, {3, 4}), nested(dec({}, {{0, 1}}, {2}))));

  aliases_ = {{"sl2", "A_3_8"}, {"o3", "A_3_9"}};
}

const CatalogEntry* Catalog::find(const std::string& name, ParamMap* pinned) const {
  std::string key = name;
  auto alias = aliases_.find(key);
  if (alias != aliases_.end()) key = alias->second;
  for (const CatalogEntry& e : entries_) {
    if (e.name == key) {
      if (pinned) pinned->clear();
      return &e;
    }
    for (const auto& [spec_name, spec_params] : e.specializations) {
      if (spec_name == key) {
        if (pinned) *pinned = spec_params;
        return &e;
      }
    }
  }
  return nullptr;
}

LieAlgebra Catalog::lookup(const std::string& name, const ParamMap& params) const {
  ParamMap pinned;
  const CatalogEntry* entry = find(name, &pinned);
  if (!entry) throw std::invalid_argument("unknown catalog entry '" + name + "'");
  ParamMap effective = pinned;
  for (const auto& [key, value] : params) effective[key] = value;
  for (const std::string& sym : entry->param_symbols) {
    if (!effective.count(sym)) {
      throw std::invalid_argument("entry " + entry->name + " needs parameter '" + sym +
                                  "' (" + entry->range_text + ")");
    }
  }
  if (entry->has_params() && !entry->in_range(effective)) {
    throw std::invalid_argument("parameters " + format_params(effective) +
                                " outside the range of " + entry->name + " (" +
                                entry->range_text + ")");
  }
  return entry->build(effective).renamed(name);
}

GradedRecipe Catalog::decomposition_for(const std::string& name) const {
  const CatalogEntry* entry = find(name);
  if (entry) {
    if (entry->perfect) {
      throw std::invalid_argument(entry->name +
                                  " is perfect and has no decomposition row");
    }
    if (entry->decomposition) return *entry->decomposition;
  }
  auto row = table_rows_.find(name);
  if (row != table_rows_.end()) return row->second;
  throw std::invalid_argument("no decomposition metadata for '" + name + "'");
}

std::vector<std::string> Catalog::load_entries(const std::string& path) {
  std::vector<std::string> loaded;
  for (AlgebraEntry& parsed : parse_algebra_file(path)) {
    const LieAlgebra& alg = parsed.algebra;
    const JacobiReport jacobi = check_jacobi(alg);
    if (!jacobi.ok()) {
      const auto& v = jacobi.violations.front();
      throw std::runtime_error(path + ": entry " + alg.name() +
                               " violates the Jacobi identity at (" +
                               std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," +
                               std::to_string(v.k + 1) + ")");
    }
    if (const CatalogEntry* existing = find(alg.name())) {
      if (existing->has_params() || !existing->build({}).same_structure(alg)) {
        throw std::runtime_error(path + ": entry " + alg.name() +
                                 " conflicts with an existing entry of the same name");
      }
      loaded.push_back(alg.name());
      continue;
    }
    CatalogEntry e;
    e.name = alg.name();
    e.dim = alg.dim();
    e.build = [alg](const ParamMap&) { return alg; };
    e.in_range = [](const ParamMap&) { return true; };
    e.perfect = is_perfect(alg);
    if (parsed.decomposition) {
      std::shared_ptr<const GradedRecipe> nested_recipe;
      auto row = table_rows_.find(e.name);
      if (row != table_rows_.end() && row->second.decomposition.h == parsed.decomposition->h) {
        nested_recipe = row->second.h_block;
      }
      e.decomposition = GradedRecipe{*parsed.decomposition, nested_recipe};
    } else if (!e.perfect) {
      auto row = table_rows_.find(e.name);
      if (row != table_rows_.end()) e.decomposition = row->second;
    }
    entries_.push_back(std::move(e));
    loaded.push_back(alg.name());
  }
  return loaded;
}

namespace {

struct CertifyJob {
  const CatalogEntry* entry;
  std::string row_name;
  ParamMap params;
};

CertificationRow run_job(const CertifyJob& job) {
  CertificationRow row;
  row.name = job.row_name;
  row.params = format_params(job.params);
  row.dim = job.entry->dim;
  try {
    const LieAlgebra l = job.entry->build(job.params).renamed(job.row_name);
    const JacobiReport jacobi = check_jacobi(l);
    if (!jacobi.ok()) {
      row.ifas_status = "FAIL: Jacobi identity violated";
      row.ifps_status = "FAIL: Jacobi identity violated";
      return row;
    }
    row.perfect = is_perfect(l);
    if (row.perfect != job.entry->perfect) {
      row.ifas_status = "FAIL: perfect flag mismatch";
      row.ifps_status = row.ifas_status;
      return row;
    }
    if (row.perfect) {
      row.ifas_status = "no-IFAS-cited";
      if (job.entry->ifps_witness) {
        GradedHom f = build_named_n_hom(*job.entry->ifps_witness);
        if (!f.source().same_structure(l)) {
          row.ifps_status = "FAIL: attached witness lives on different constants";
          return row;
        }
        const WitnessCertificate cert = check_n_hom(l, GradedHom(l, f.matrices()));
        if (!cert.ok()) {
          row.ifps_status = "FAIL: " + cert.counterexample->predicate;
          return row;
        }
        row.ifps_status = "certified";
        row.ifps_witness = GradedHom(l, f.matrices(), f.notes());
      } else {
        row.ifps_status = "cited-only";
      }
      return row;
    }
    if (!job.entry->decomposition) {
      row.ifas_status = "FAIL: no decomposition metadata";
      row.ifps_status = "FAIL: no decomposition metadata";
      return row;
    }
    AutoIfasMetadata meta;
    meta.indecomposable = *job.entry->decomposition;
    AutoIfasResult result = auto_ifas(l, meta);
    if (!result.witness) {
      row.ifas_status = "FAIL: no witness produced";
      row.ifps_status = row.ifas_status;
      return row;
    }
    row.ifas_status = "certified";
    row.ifps_status = "via-IFAS";
    row.ifas_witness = std::move(result.witness);
  } catch (const std::exception& e) {
    row.ifas_status = std::string("FAIL: ") + e.what();
    row.ifps_status = "FAIL: see ifas_status";
  }
  return row;
}

}  // namespace

CertificationReport Catalog::certify_all(Index dim_lo, Index dim_hi,
                                         const std::vector<Rational>& grid_override) const {
  const std::vector<Rational>& base =
      grid_override.empty() ? default_sample_values() : grid_override;
  std::vector<CertifyJob> jobs;
  for (const CatalogEntry& e : entries_) {
    if (e.dim < dim_lo || e.dim > dim_hi) continue;
    for (ParamMap& sample : e.sample_grid(base)) {
      jobs.push_back({&e, e.name, std::move(sample)});
    }
    for (const auto& [spec_name, spec_params] : e.specializations) {
      jobs.push_back({&e, spec_name, spec_params});
    }
  }
  std::sort(jobs.begin(), jobs.end(), [](const CertifyJob& a, const CertifyJob& b) {
    if (a.row_name != b.row_name) return natural_less(a.row_name, b.row_name);
    return format_params(a.params) < format_params(b.params);
  });

  CertificationReport report;
  report.rows.resize(jobs.size());
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futures;
  std::size_t chunk = (jobs.size() + workers - 1) / std::max<std::size_t>(1, workers);
  if (chunk == 0) chunk = 1;
  for (std::size_t begin = 0; begin < jobs.size(); begin += chunk) {
    const std::size_t end = std::min(jobs.size(), begin + chunk);
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) report.rows[i] = run_job(jobs[i]);
    }));
  }
  for (auto& f : futures) f.get();
  return report;
}

void write_report(const CertificationReport& report, std::ostream& os) {
  os << "name\tparams\tdim\tperfect\tifas_status\tifps_status\twitness_file\n";
  for (const CertificationRow& row : report.rows) {
    os << row.name << "\t" << row.params << "\t" << row.dim << "\t"
       << (row.perfect ? "yes" : "no") << "\t" << row.ifas_status << "\t" << row.ifps_status
       << "\t" << row.witness_file << "\n";
  }
}

void save_report(const CertificationReport& report, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_report(report, out);
}

}  // namespace lieflat
