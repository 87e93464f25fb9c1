#pragma once

#include <string>
#include <vector>

namespace hypercent {

/// Entry point behind the `hypercent` binary. args excludes the program
/// name. Returns 0 on success, 1 on validation/parse errors, 2 when a
/// solver failed to converge and --allow-unconverged was not given.
int run_cli(const std::vector<std::string>& args);

}  // namespace hypercent
