#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xrank {

// Dispatches {table, generic-rank, bounds, rank-binary, decompose, typical}.
// Exit codes: 0 success, 1 computation failure (e.g. fit nonconvergence),
// 2 usage error. Every stochastic command records its seed in the output.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace xrank
