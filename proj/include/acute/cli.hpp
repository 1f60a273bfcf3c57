#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acute::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

// Default for --tol when the flag is absent.
inline constexpr const char* kToleranceEnv = "ACUTE_TOLERANCE";

// args excludes the program name. Compute subcommands print one JSON object
// (keys sorted) on `out`; failures print a JSON error object on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace acute::cli
