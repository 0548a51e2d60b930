#pragma once

#include <iosfwd>

namespace aifp::cli {

/// Runs one invocation. Exit code 0 on success, 1 on validation or
/// computation errors, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aifp::cli
