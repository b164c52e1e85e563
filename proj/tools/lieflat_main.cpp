#include "lieflat/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

lieflat::ParamMap parse_params(const std::vector<std::string>& kvs) {
  lieflat::ParamMap params;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--params", "expected k=v, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = lieflat::parse_rational(kv.substr(eq + 1));
  }
  return params;
}

std::vector<lieflat::Rational> parse_grid(const std::string& grid) {
  std::vector<lieflat::Rational> values;
  if (grid.empty()) return values;
  std::string cur;
  for (char ch : grid + ",") {
    if (ch == ',') {
      values.push_back(lieflat::parse_rational(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact certification of flat affine and projective structure witnesses "
               "on low-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string file, algebra, witness, target, ctor, range, name;
  std::vector<std::string> params;
  lieflat::CmdOptions opts;
  std::string grid;

  CLI::App* jacobi = app.add_subcommand("jacobi", "check the Jacobi identity of an algebra file");
  jacobi->add_option("file", file, "structure-constants file")->required();

  CLI::App* verify = app.add_subcommand("verify", "verify a witness file against an algebra");
  verify->add_option("algebra", algebra, "algebra file or catalog name")->required();
  verify->add_option("witness", witness, "witness file")->required();
  verify->add_option("--kind", opts.kind, "ifas | phom | nhom | extended");
  verify->add_option("--params", params, "catalog parameters k=v");
  verify->add_flag("--explain", opts.explain, "list the checks behind the verdict");

  CLI::App* construct = app.add_subcommand("construct", "build and certify a witness");
  construct->add_option("target", target, "catalog entry, composite a+b, or t / slaff")
      ->required();
  construct->add_option("constructor", ctor,
                        "auto | graded | semidirect | nhom | extend | direct-sum | "
                        "reducible-sum | sum-plus-line, or the size for t / slaff")
      ->required();
  construct->add_option("--params", params, "catalog parameters k=v");
  construct->add_option("--out", opts.out, "write the witness here");
  construct->add_flag("--explain", opts.explain, "describe the construction per block");

  CLI::App* normalize = app.add_subcommand("normalize", "project a graded witness to corner-free form");
  normalize->add_option("witness", witness, "phom/nhom witness file")->required();
  normalize->add_option("--algebra", opts.algebra, "algebra file or catalog name");
  normalize->add_option("--params", params, "catalog parameters k=v");
  normalize->add_option("--out", opts.out, "write the result here");

  CLI::App* catalog = app.add_subcommand("catalog", "inspect the built-in classification");
  CLI::App* list = catalog->add_subcommand("list", "one line per entry");
  CLI::App* show = catalog->add_subcommand("show", "full entry details");
  show->add_option("name", name, "entry name")->required();
  catalog->require_subcommand(1);

  CLI::App* certify = app.add_subcommand("certify", "sweep the catalog over a dimension range");
  certify->add_option("range", range, "dimension range lo..hi")->required();
  certify->add_option("--entries", opts.entries_file, "ingest extra entries first");
  certify->add_option("--out", opts.out, "also write the report here");
  certify->add_option("--witnesses", opts.witness_dir, "write per-row witness files here");
  certify->add_option("--grid", grid, "comma-separated sample values overriding the default");

  try {
    app.parse(argc, argv);
    opts.params = parse_params(params);
    opts.grid = parse_grid(grid);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (jacobi->parsed()) return lieflat::cmd_jacobi(file, std::cout, std::cerr);
    if (verify->parsed()) return lieflat::cmd_verify(algebra, witness, opts, std::cout, std::cerr);
    if (construct->parsed()) return lieflat::cmd_construct(target, ctor, opts, std::cout, std::cerr);
    if (normalize->parsed()) return lieflat::cmd_normalize(witness, opts, std::cout, std::cerr);
    if (certify->parsed()) return lieflat::cmd_certify(range, opts, std::cout, std::cerr);
    if (list->parsed()) return lieflat::cmd_catalog_list(std::cout, std::cerr);
    if (show->parsed()) return lieflat::cmd_catalog_show(name, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
