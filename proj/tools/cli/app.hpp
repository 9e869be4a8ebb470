#pragma once

#include <ostream>

namespace burgess::cli {

/// Entry point of the `burgess` tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace burgess::cli
