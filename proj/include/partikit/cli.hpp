#pragma once

// Command-line surface: counting, symbolic output, self-verification, and
// benchmarking. run() is the whole entry point so tests can drive the CLI
// in-process with captured streams.
//
// Exit codes: 0 success, 1 usage error, 2 precondition violation,
// 3 verification failure or internal inconsistency.

#include <iosfwd>
#include <string>
#include <vector>

namespace partikit {

// args holds the tokens after the program name, in natural order.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partikit
