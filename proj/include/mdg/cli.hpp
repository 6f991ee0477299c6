#ifndef MDG_CLI_HPP
#define MDG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mdg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitParse = 3,
    kExitNotStrong = 4,
    kExitViolation = 5,
    kExitBudget = 6,
};

/// Run the CLI on the given arguments (without the program name), writing to
/// the supplied streams. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mdg

#endif
