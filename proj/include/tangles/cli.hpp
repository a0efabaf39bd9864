#pragma once

#include <string>
#include <vector>

namespace tangles {

struct CliResult {
  int status = 0;
  std::string out;
  std::string err;
};

// Runs one CLI invocation.  args excludes the program name.  Exit status
// 0 on success, 1 on domain errors (error payload emitted), 2 on usage
// errors.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace tangles
