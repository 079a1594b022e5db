#ifndef APOLLO_CLI_HPP
#define APOLLO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace apollo::cli {

/// Dispatches one command line (without the program name). Returns the
/// process exit code: 0 success, 1 engine error, 2 parse or usage error.
/// Diagnostics go to err, results to out (or to --out PATH when given).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace apollo::cli

#endif
