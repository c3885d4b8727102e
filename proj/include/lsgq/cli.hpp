#ifndef LSGQ_CLI_HPP
#define LSGQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lsgq {

// Exit codes: 0 success, 1 check failure, 2 invalid flags,
// 3 GoursatViolation, 4 NotTransitive, 5 BoundExceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);
int run_cli(int argc, char** argv);

}  // namespace lsgq

#endif
