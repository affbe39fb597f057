#pragma once

#include <ostream>

namespace fsys {

/// Exit codes: 0 pass/equivalent, 1 fail/inequivalent, 2 usage or I/O error,
/// 3 not applicable.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fsys
