#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tvra::cli {

// Exit codes: 0 success, 1 validation errors, 2 usage error,
// 3 consistency failures under --strict. Warnings alone never change exit 0.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStrict = 3;

// Runs one invocation: args excludes the program name. Reports go to `out`,
// diagnostics to `err`, for every subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tvra::cli
