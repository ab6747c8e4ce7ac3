#pragma once

#include <string>
#include <vector>

namespace nalc::cli {

enum ExitCode : int {
  kTrue = 0,      // answered true / satisfiable
  kFalse = 1,     // answered false / unsatisfiable
  kUsage = 2,     // usage or parse error
  kResource = 3,  // resource exhaustion
};

struct Result {
  int code = kUsage;
  std::string out;
  std::string err;
};

// args excludes the program name.
Result run(const std::vector<std::string>& args);

}  // namespace nalc::cli
