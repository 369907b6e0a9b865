#pragma once

#include <ostream>

namespace seqdim::cli {

/// Entry point of the seqdim tool. Returns the process exit code:
/// 0 success, 1 parse error, 2 domain error, 3 oracle subprocess error,
/// 4 disagreement between the two exact routes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace seqdim::cli
