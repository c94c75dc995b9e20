#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 when the answer is negative (reject, false, NotDetermined),
/// 2 on malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spfc::cli
