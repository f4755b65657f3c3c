#ifndef FORTS_CLI_HPP
#define FORTS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace forts {

// Runs one subcommand and writes the certificate JSON to out.
// Exit codes: 0 success, 1 input error, 2 certified negative or verify
// mismatch, 3 cap or budget exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace forts

#endif
