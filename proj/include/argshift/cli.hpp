#ifndef ARGSHIFT_CLI_HPP
#define ARGSHIFT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace argshift::cli {

// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitInputError = 2;

// Dispatches one invocation; `args` excludes the program name.  All output
// goes to the supplied streams, which keeps invocations reproducible and
// testable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace argshift::cli

#endif
