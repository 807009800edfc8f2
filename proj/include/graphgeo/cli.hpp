#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one command. `args` excludes the program name. A file argument of
/// `-` reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphgeo::cli
