#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hyperclique::cli {

/// Exit codes: 0 success or validation passed, 1 validation failed or a
/// bound was violated, 2 usage or input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, printed as 16 hex digits in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace hyperclique::cli
