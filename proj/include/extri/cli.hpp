#ifndef EXTRI_CLI_HPP
#define EXTRI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace extri::cli {

enum ExitCode : int
{
    kOk = 0,
    kDomainError = 1,
    kBudgetExceeded = 2,
    kCheckFailed = 3,
    kUsage = 64,
};

/// Runs one command. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace extri::cli

#endif // EXTRI_CLI_HPP
