#ifndef ALGDIAG_CLI_CLI_HPP
#define ALGDIAG_CLI_CLI_HPP

#include <ostream>

namespace algdiag::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;

/// Runs the algdiag command line with output redirected to the given streams.
/// argv[0] is the program name.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algdiag::cli

#endif
