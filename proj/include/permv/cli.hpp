#ifndef PERMV_CLI_HPP
#define PERMV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permv::cli {

// Exit codes: 0 success/match, 1 verification mismatch, 2 usage error,
// 3 resource cap exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace permv::cli

#endif
