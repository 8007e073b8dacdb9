#pragma once

#include <iosfwd>

namespace treecode {

/// The `treecode` command line. Returns 0 on success, 1 on domain errors (and
/// failed verification), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace treecode
