#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aluffi::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kTorsionOrMismatch = 1,  // vv-check found torsion; paper-examples disagreed
  kParseError = 2,         // malformed command line or input file
  kGlpViolation = 3,       // --igp on points not in general linear position
  kFailure = 4,            // any other error (precondition, degree cap, ...)
};

/// Runs one command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aluffi::cli
