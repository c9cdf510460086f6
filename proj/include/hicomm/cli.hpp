// Command-line front end; exit codes: 0 ok, 1 property failure, 2 usage
// error, 3 resource limit.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hicomm {

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace hicomm
