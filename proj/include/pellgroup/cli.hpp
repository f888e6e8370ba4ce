#ifndef PELLGROUP_CLI_HPP
#define PELLGROUP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pellgroup::cli {

enum ExitCode : int
{
    ok = 0,
    usage_error = 1,
    domain_error = 2,
    oracle_disagreement = 3,
    internal_error = 4,
};

/// Runs the command line `args` (without the program name), writing data to
/// `out` and diagnostics to `err`. Returns the process exit status.
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace pellgroup::cli

#endif
