#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace conic {

// Exit codes: 0 success, 1 mathematical counterexample or failed check,
// 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace conic
