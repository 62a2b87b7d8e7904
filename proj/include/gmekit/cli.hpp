#pragma once

#include <iosfwd>

namespace gmekit::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;

/// Entry point of the gme-kit command line. Never throws; returns one of the
/// exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gmekit::cli
