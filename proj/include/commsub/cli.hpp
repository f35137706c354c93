#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace commsub {

/// Runs the command-line tool on `args` (program name excluded). Data goes to
/// `out`, logs and warnings to `err`. Returns 0 on success, 1 on domain or
/// input errors, 2 when a search or enumeration budget is exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace commsub
