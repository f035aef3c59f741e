#ifndef FLIPCOUNT_CLI_HPP
#define FLIPCOUNT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flipcount {

// Runs the command line tool on args (program name excluded).  Returns the
// process exit code: 0 success, 2 schema or input errors, 3 rejected flip,
// 4 verification mismatch, 5 irreducibility required but absent.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flipcount

#endif
