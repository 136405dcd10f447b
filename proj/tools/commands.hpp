#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegativeVerdict = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;

/// Full command-line surface; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace qbg::cli
