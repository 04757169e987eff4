#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace predom {

/// Exit codes shared by every command.
enum ExitCode : int {
  kExitOk      = 0,  // every check passed
  kExitFailed  = 1,  // a mathematical check failed; a witness is printed
  kExitUsage   = 2,  // bad arguments, unreadable or malformed files
  kExitBound   = 3,  // an enumeration bound was exceeded
};

/// Runs the command line tool. args excludes the program name.
int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace predom
