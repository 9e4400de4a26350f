#pragma once

#include <ostream>

namespace entwine::cli {

// Exit codes.
inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kInputError = 2;
inline constexpr int kUnknown = 3;

// Runs one command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace entwine::cli
