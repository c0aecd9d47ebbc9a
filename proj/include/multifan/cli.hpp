#pragma once

// Command-line driver, callable in-process for tests.  Returns the exit
// status: 0 success / property verified, 1 usage or input error,
// 2 verification failure.

#include <iosfwd>
#include <string>
#include <vector>

namespace multifan {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace multifan
