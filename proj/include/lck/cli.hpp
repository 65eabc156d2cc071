#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lck {

/// Runs one `lck` subcommand. Exit codes: 0 all checks pass (a false Vaisman
/// verdict is a finding, not a failure), 1 a check or an expectation failed,
/// 2 usage or input error, 3 internal invariant violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lck
