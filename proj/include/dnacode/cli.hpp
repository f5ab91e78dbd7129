#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnacode::cli {

enum exit_status : int
{
  exit_ok = 0,
  exit_invalid = 1,
  exit_usage = 2,
  exit_io = 3,
};

/**
 * Runs the command line tool. args excludes the program name. Data goes to
 * out (or files), diagnostics to err.
 */
int
run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dnacode::cli
