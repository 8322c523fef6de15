#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frieze::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a failed verification or computation, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frieze::cli
