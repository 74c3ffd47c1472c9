#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sptcrank::cli {

enum ExitCode : int {
  kPass = 0,
  kFailure = 1,
  kUsage = 2,
  kInternal = 3,
};

inline constexpr std::size_t kMaxOrder = 20000;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --out is given; logs and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sptcrank::cli
