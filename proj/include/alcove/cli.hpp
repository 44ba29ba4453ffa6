#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alcove {

/// Entry point shared by the binary and the tests.  Returns 0 on success,
/// 1 on domain errors (singular input where a regular one is required,
/// missing rule data, cache digest conflicts), 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace alcove
