#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "pcascade/parabolic.hpp"

namespace pcascade::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses "i,j,k" (1-based, diagram order). Throws UsageError naming the offending token.
ParabolicSubset parse_phi(const std::string& text, int rank);

/**
 * Runs one command line (args excludes the program name). Reports go to `out`
 * unless --out is given; diagnostics go to `err`.
 * Returns 0 when every check passes, 1 on a failed check, 2 on a usage error.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pcascade::cli
