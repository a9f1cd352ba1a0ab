#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace matprov::cli {

// Exit codes: 0 success, 1 domain error (bad input data, failed evaluation),
// 2 usage error (unknown flags, missing paths).
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Dispatches the matprov subcommands (validate, stats, eval, backbone,
// extract, export-dot). `args` excludes the program name. Data goes to `out`
// or --out paths; diagnostics go to `err`. Never throws on malformed input
// files; those exit with kExitDomainError.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace matprov::cli
