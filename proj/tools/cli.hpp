#pragma once

#include <iosfwd>

namespace stk::cli {

/// Runs one `stk` command. Returns the process exit code: 0 on success,
/// 2 for usage or parse errors, 3 for domain errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stk::cli
