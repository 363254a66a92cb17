#ifndef BITWIST_CLI_COMMANDS_HPP_
#define BITWIST_CLI_COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace bitwist::cli {

  inline constexpr int exit_ok          = 0;
  inline constexpr int exit_fail_report = 1;
  inline constexpr int exit_input_error = 2;

  //! Runs one command line (without the program name) and returns the exit
  //! code: 0 on success, 1 when a verification reports FAIL, 2 on bad input.
  int run_command(std::vector<std::string> const& args, std::ostream& out,
                  std::ostream& err);

}  // namespace bitwist::cli

#endif  // BITWIST_CLI_COMMANDS_HPP_
