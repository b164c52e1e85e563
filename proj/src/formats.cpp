#include "lieflat/formats.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lieflat {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

Index parse_index(const std::string& tok, Index dim, const std::string& origin, int line) {
  for (char ch : tok) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(origin, line, "expected a basis index, got '" + tok + "'");
    }
  }
  const long v = std::stol(tok);
  if (v < 1 || v > dim) {
    throw ParseError(origin, line, "basis index " + tok + " out of range 1.." +
                                       std::to_string(dim));
  }
  return static_cast<Index>(v - 1);
}

}  // namespace

std::vector<AlgebraEntry> parse_algebra_entries(std::istream& in, const std::string& origin) {
  std::vector<AlgebraEntry> out;

  std::string name;
  Index dim = 0;
  std::vector<LieAlgebra::BracketTerm> terms;
  GradedDecomposition decomp;
  bool has_decomp = false;
  bool open = false;
  int line_no = 0;

  auto flush = [&](int line) {
    if (!open) return;
    LieAlgebra algebra(dim, terms, name);
    std::optional<GradedDecomposition> d;
    if (has_decomp) {
      try {
        validate_grading(algebra, decomp);  // partition check; violations are fine here
      } catch (const std::invalid_argument& e) {
        throw ParseError(origin, line, std::string("bad decomposition: ") + e.what());
      }
      d = decomp;
    }
    out.push_back({std::move(algebra), std::move(d)});
    terms.clear();
    decomp = GradedDecomposition{};
    has_decomp = false;
    open = false;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head == "algebra") {
      flush(line_no);
      if (tokens.size() != 3) {
        throw ParseError(origin, line_no, "expected: algebra <name> <dim>");
      }
      name = tokens[1];
      try {
        dim = static_cast<Index>(std::stol(tokens[2]));
      } catch (...) {
        throw ParseError(origin, line_no, "bad dimension '" + tokens[2] + "'");
      }
      if (dim < 1) throw ParseError(origin, line_no, "dimension must be positive");
      open = true;
      continue;
    }
    if (!open) throw ParseError(origin, line_no, "content before an 'algebra' line");

    if (head == "c") {
      if (tokens.size() != 5) {
        throw ParseError(origin, line_no, "expected: c <i> <j> <k> <p/q>");
      }
      const Index i = parse_index(tokens[1], dim, origin, line_no);
      const Index j = parse_index(tokens[2], dim, origin, line_no);
      const Index k = parse_index(tokens[3], dim, origin, line_no);
      if (i >= j) throw ParseError(origin, line_no, "bracket lines need i < j");
      const auto coeff = try_parse_rational(tokens[4]);
      if (!coeff) throw ParseError(origin, line_no, "malformed rational '" + tokens[4] + "'");
      terms.push_back({i, j, k, *coeff});
    } else if (head == "h") {
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        decomp.h.push_back(parse_index(tokens[t], dim, origin, line_no));
      }
      has_decomp = true;
    } else if (head == "z") {
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        decomp.zprime.push_back(parse_index(tokens[t], dim, origin, line_no));
      }
      has_decomp = true;
    } else if (head.size() > 1 && head[0] == 'k') {
      std::size_t layer = 0;
      try {
        layer = std::stoul(head.substr(1));
      } catch (...) {
        throw ParseError(origin, line_no, "unknown directive '" + head + "'");
      }
      if (layer < 1) throw ParseError(origin, line_no, "layer numbers start at 1");
      if (decomp.layers.size() < layer) decomp.layers.resize(layer);
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        decomp.layers[layer - 1].push_back(parse_index(tokens[t], dim, origin, line_no));
      }
      has_decomp = true;
    } else {
      throw ParseError(origin, line_no, "unknown directive '" + head + "'");
    }
  }
  flush(line_no);
  if (out.empty()) throw ParseError(origin, line_no, "no algebra found");
  return out;
}

std::vector<AlgebraEntry> parse_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_algebra_entries(in, path);
}

AlgebraEntry parse_single_algebra_file(const std::string& path) {
  std::vector<AlgebraEntry> entries = parse_algebra_file(path);
  if (entries.size() != 1) {
    throw std::runtime_error(path + ": expected exactly one algebra, found " +
                             std::to_string(entries.size()));
  }
  return std::move(entries.front());
}

void write_algebra(std::ostream& os, const LieAlgebra& l,
                   const std::optional<GradedDecomposition>& d) {
  os << "algebra " << (l.name().empty() ? "unnamed" : l.name()) << " " << l.dim() << "\n";
  for (const auto& t : l.bracket_list()) {
    os << "c " << t.i + 1 << " " << t.j + 1 << " " << t.k + 1 << " " << t.coeff << "\n";
  }
  if (d) {
    auto write_indices = [&os](const std::string& head, const std::vector<Index>& idx) {
      if (idx.empty()) return;
      os << head;
      for (Index i : idx) os << " " << i + 1;
      os << "\n";
    };
    write_indices("h", d->h);
    for (std::size_t m = 0; m < d->layers.size(); ++m) {
      write_indices("k" + std::to_string(m + 1), d->layers[m]);
    }
    write_indices("z", d->zprime);
  }
}

WitnessFile parse_witness_text(std::istream& in, const std::string& origin) {
  WitnessFile wf;
  int line_no = 0;
  std::string line;
  bool have_header = false;
  Index expected_rows = 0;
  Mat current;
  Index filled = 0;

  auto close_map = [&](int line) {
    if (expected_rows == 0) return;
    if (filled != expected_rows) {
      throw ParseError(origin, line, "map block ended after " + std::to_string(filled) +
                                         " of " + std::to_string(expected_rows) + " rows");
    }
    wf.maps.push_back(current);
    expected_rows = 0;
    filled = 0;
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (!have_header) {
      if (head != "witness" || tokens.size() != 4) {
        throw ParseError(origin, line_no, "expected: witness <kind> <algebra> <m>");
      }
      wf.kind = tokens[1];
      if (wf.kind != "ifas" && wf.kind != "phom" && wf.kind != "nhom" &&
          wf.kind != "extended") {
        throw ParseError(origin, line_no, "unknown witness kind '" + wf.kind + "'");
      }
      wf.algebra_name = tokens[2];
      try {
        wf.m = static_cast<Index>(std::stol(tokens[3]));
      } catch (...) {
        throw ParseError(origin, line_no, "bad matrix size '" + tokens[3] + "'");
      }
      if (wf.m < 1) throw ParseError(origin, line_no, "matrix size must be positive");
      have_header = true;
      continue;
    }

    if (head == "map") {
      close_map(line_no);
      if (tokens.size() != 2) throw ParseError(origin, line_no, "expected: map <i>");
      long idx = 0;
      try {
        idx = std::stol(tokens[1]);
      } catch (...) {
        throw ParseError(origin, line_no, "bad map index '" + tokens[1] + "'");
      }
      if (idx != static_cast<long>(wf.maps.size()) + 1) {
        throw ParseError(origin, line_no, "map blocks must be numbered consecutively from 1");
      }
      current = Mat::Zero(wf.m, wf.m);
      expected_rows = wf.m;
      filled = 0;
      continue;
    }

    if (expected_rows == 0) {
      throw ParseError(origin, line_no, "matrix row outside a map block");
    }
    if (static_cast<Index>(tokens.size()) != wf.m) {
      throw ParseError(origin, line_no, "expected " + std::to_string(wf.m) +
                                            " entries per row");
    }
    for (Index c = 0; c < wf.m; ++c) {
      const auto val = try_parse_rational(tokens[static_cast<std::size_t>(c)]);
      if (!val) {
        throw ParseError(origin, line_no,
                         "malformed rational '" + tokens[static_cast<std::size_t>(c)] + "'");
      }
      current(filled, c) = *val;
    }
    ++filled;
  }
  close_map(line_no);
  if (!have_header) throw ParseError(origin, line_no, "missing witness header");
  if (wf.maps.empty()) throw ParseError(origin, line_no, "witness has no map blocks");
  return wf;
}

WitnessFile parse_witness_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_witness_text(in, path);
}

void write_witness(std::ostream& os, const std::string& kind, const std::string& algebra_name,
                   const std::vector<Mat>& maps, const std::vector<std::string>& notes) {
  const Index m = maps.empty() ? 0 : maps.front().rows();
  for (const std::string& note : notes) os << "# " << note << "\n";
  os << "witness " << kind << " " << (algebra_name.empty() ? "unnamed" : algebra_name) << " "
     << m << "\n";
  for (std::size_t i = 0; i < maps.size(); ++i) {
    os << "map " << i + 1 << "\n";
    for (Index r = 0; r < m; ++r) {
      for (Index c = 0; c < m; ++c) {
        if (c) os << " ";
        os << maps[i](r, c);
      }
      os << "\n";
    }
  }
}

std::string format_vector(const Vec& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v(i).str();
  }
  return out;
}

std::string format_certificate(const WitnessCertificate& cert) {
  if (cert.ok()) return "PASS";
  const Counterexample& c = *cert.counterexample;
  std::string out = "FAIL " + c.predicate + " at (" + std::to_string(c.i + 1) + "," +
                    std::to_string(c.j + 1) + "): residual";
  for (Index r = 0; r < c.residual.rows(); ++r) {
    for (Index col = 0; col < c.residual.cols(); ++col) {
      out += " " + c.residual(r, col).str();
    }
    if (c.residual.cols() > 1 && r + 1 < c.residual.rows()) out += " ;";
  }
  return out;
}

}  // namespace lieflat
