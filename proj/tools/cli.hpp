#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "karp/verify.hpp"

namespace karp::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kBadArguments = 2;

struct Hooks {
  /// Passed to verify_order by the verify command.
  MatrixHook verify_hook;
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace karp::cli
