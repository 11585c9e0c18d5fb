#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permfft::cli {

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on usage or parse errors, 2 on bound or verification failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permfft::cli
