#pragma once

#include <string>
#include <vector>

namespace aesec {

struct SelftestCheck
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Built-in validation: AES known-answer vectors, pattern-generator
/// completeness at n = 12, maximum-likelihood agreement of GRAND on an [8,4]
/// random linear code, and hard-decision channel calibration at 4, 6, 8 dB.
std::vector<SelftestCheck> run_selftest();

}  // namespace aesec
