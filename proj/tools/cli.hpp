#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scalekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitCap = 3;

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. A failed scale check still exits 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scalekit::cli
