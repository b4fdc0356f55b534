#pragma once

#include <iosfwd>

namespace rigid::cli {

/// Runs one rigidroots command line. Returns 0 on success, 1 when a
/// verification fails or a command cannot complete, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rigid::cli
