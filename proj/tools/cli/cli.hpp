#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sdn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPixelError = 2,
  kValidation = 3,
  kConvergence = 4,
  kIo = 5,
};

// Entry point shared by the `sdn` binary and the tests. `args` excludes
// the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdn::cli
