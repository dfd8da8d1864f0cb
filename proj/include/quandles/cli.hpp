#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quandles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;     // not isomorphic, failed check
inline constexpr int kExitError = 2;  // bad input, not in class, budget

/// Runs the command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quandles::cli
