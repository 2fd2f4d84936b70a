#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qbt::cli {

enum ExitCode : int { kPass = 0, kNegative = 1, kInputError = 2, kInconclusive = 3 };

/// Runs the qbt command line; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbt::cli
