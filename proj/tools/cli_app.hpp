#ifndef SHARPDEG_CLI_APP_HPP
#define SHARPDEG_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sharpdeg::cli {

// Exit codes: 0 ok, 1 a guaranteed inequality failed, 2 input error,
// 3 a cap was exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sharpdeg::cli

#endif
