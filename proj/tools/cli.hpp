#pragma once

#include <iosfwd>

namespace bnorder::cli {

/// Runs one invocation. Exit codes: 0 success, 1 a failed check or a
/// computation error, 2 a usage error (bad flags, unknown check, n outside a
/// bound). `tty` selects the default output format.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, bool tty);

}  // namespace bnorder::cli
