#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hre {

/// Entry point of the `hre` tool. args[0] is the program name.
/// Returns 0 for match/true, 1 for no match/false, 2 for errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hre
