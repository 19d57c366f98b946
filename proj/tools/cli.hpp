#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgiso::cli {

/// Exit codes: 0 yes/valid, 1 no/invalid/non-isomorphic, 2 usage or format error.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgiso::cli
