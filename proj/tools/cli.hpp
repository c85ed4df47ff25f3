#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlat::cli {

  enum ExitCode : int { ok = 0, property_fails = 1, input_error = 2 };

  //! args excludes the program name. Algebra and lattice arguments are file
  //! paths, or builtin names when no such file exists.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace rlat::cli
