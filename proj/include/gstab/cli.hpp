#pragma once

#include <iosfwd>

namespace gstab {

/// Exit codes: 0 success, 1 divergence or failed check, 2 usage or parse error.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace gstab
