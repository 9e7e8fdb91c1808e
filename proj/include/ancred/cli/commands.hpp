#pragma once

// Command-line entry point.  Exit codes are a fixed contract for scripting:
// 0 success, 1 domain or data error, 2 usage error.

namespace ancred::cli {

int run(int argc, const char* const* argv);

}  // namespace ancred::cli
