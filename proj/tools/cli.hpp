#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mlc::cli {

/// Parses and executes one command line (program name excluded). All JSON
/// results and structured errors go to `out`; `err` only receives text that
/// is not part of the machine-readable protocol.
///
/// Exit codes: 0 success/feasible, 2 infeasible (a certificate or failed
/// verification is printed), 1 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mlc::cli
