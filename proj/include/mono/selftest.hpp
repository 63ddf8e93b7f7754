// Condensed end-to-end sanity pass for the installed binary: one line per
// check, exit status 0 only if every check holds. The full test suite is the
// authority; this is the quick field check.

#pragma once

#include <ostream>

namespace mono {

int run_selftest(std::ostream& out);

}  // namespace mono
