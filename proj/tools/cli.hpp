// SPDX-License-Identifier: Apache-2.0

#ifndef TREEDOC_TOOLS_CLI_HPP
#define TREEDOC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treedoc::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kFaults = 1;  // document faults; outputs are still written
inline constexpr int kUsage = 2;   // bad flags, unreadable input, unwritable output

// Runs one invocation. `args` excludes the program name. A path of "-"
// reads `in` or writes `out`; diagnostics and errors go to `err` (as JSON
// lines with --json).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace treedoc::cli

#endif  // TREEDOC_TOOLS_CLI_HPP
