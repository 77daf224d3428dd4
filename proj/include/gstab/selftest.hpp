#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gstab/cz_table.hpp"

namespace gstab {

struct CheckResult {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0; }
};

/// Exhaustive audit of the local Clifford tables and the CZ table against
/// freshly computed matrices.
std::vector<CheckResult> selftest(const CzTable &cz = *default_cz_table());

void print_checks(std::ostream &out, const std::vector<CheckResult> &checks);

}  // namespace gstab
