// Command-line driver: ingest, label, train, evaluate, predict, bounds.
// Exposed as a library function so the whole surface is testable in
// process; the cadorder binary is a thin wrapper.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cadorder {

inline constexpr const char* kToolVersion = "cadorder 0.1.0";

// Exit codes: 0 success, 1 usage error, 2 data error, 3 backend error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cadorder
