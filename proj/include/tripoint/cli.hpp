#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tripoint::cli {

// Exit codes: 0 when the verdict is positive or the task completed, 1 when
// a check came back negative (axiom violations, a failed contraction
// condition, an orbit that never settled), 2 for structural problems
// (unreadable file, malformed spec, values outside their ranges).
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitStructural = 2;

// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tripoint::cli
