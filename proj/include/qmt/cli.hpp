#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmt::cli {

/// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;
/// A verify subcommand ran but at least one law did not hold.
inline constexpr int kExitCheckFailed = 3;

/// Runs the qimg command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmt::cli
