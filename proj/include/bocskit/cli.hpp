#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bocskit {

// Runs one CLI invocation. Exit codes: 0 success, 1 semantic failure
// (validation or check failed), 2 usage/IO/parse errors.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bocskit
