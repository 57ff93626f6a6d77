#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ggp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `ggp` invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggp::cli
