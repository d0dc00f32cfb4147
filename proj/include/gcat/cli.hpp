#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gcat::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kInvalidInput = 2;
inline constexpr int kResourceLimit = 3;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// only when the command succeeds; diagnostics go to `err`. Options fall back
/// to the environment variables GCAT_BUDGET, GCAT_SEED and GCAT_FORMAT.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcat::cli
