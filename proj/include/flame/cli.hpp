#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace flame::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolated = 1,
  kInputError = 2,
  kCertificateRejected = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flame::cli
