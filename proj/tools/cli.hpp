#ifndef FANOCALC_TOOLS_CLI_HPP
#define FANOCALC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fanocalc::cli {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fanocalc::cli

#endif  // FANOCALC_TOOLS_CLI_HPP
