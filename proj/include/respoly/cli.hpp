#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace respoly {

// Full command-line front end; args exclude the program name. Returns the
// process exit code: 0 success, 1 negative verdict, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace respoly
