#include <cstdio>
#include <string>
#include <vector>

#include "tangles/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  tangles::CliResult res = tangles::run_cli(args);
  if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
  if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
  return res.status;
}
