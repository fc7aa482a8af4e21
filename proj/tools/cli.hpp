#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpgset::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verdict_fail = 1;
inline constexpr int exit_usage = 2;

// Runs one command line (program name excluded). Reports go to `out`,
// diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace cpgset::cli
