#pragma once

#include "lieflat/catalog.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace lieflat {

/// Shared options for the command entry points. Exit codes across all
/// commands: 0 success / all checks pass, 1 a verification failed,
/// 2 usage or parse error.
struct CmdOptions {
  std::string kind;          // verify: ifas | phom | nhom | extended (default: file header)
  ParamMap params;
  std::string out;           // output file (witness or report)
  std::string witness_dir;   // certify: directory for per-row witness files
  std::string entries_file;  // certify: extra entries to ingest
  std::string algebra;       // normalize: algebra file or catalog name override
  std::vector<Rational> grid;
  bool explain = false;
};

int cmd_jacobi(const std::string& file, std::ostream& out, std::ostream& err);

int cmd_verify(const std::string& algebra_spec, const std::string& witness_file,
               const CmdOptions& opts, std::ostream& out, std::ostream& err);

int cmd_construct(const std::string& target, const std::string& ctor, const CmdOptions& opts,
                  std::ostream& out, std::ostream& err);

int cmd_normalize(const std::string& witness_file, const CmdOptions& opts, std::ostream& out,
                  std::ostream& err);

int cmd_certify(const std::string& range, const CmdOptions& opts, std::ostream& out,
                std::ostream& err);

int cmd_catalog_list(std::ostream& out, std::ostream& err);
int cmd_catalog_show(const std::string& name, std::ostream& out, std::ostream& err);

}  // namespace lieflat
