#include "aesec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace aesec {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z)
{
    if (trials == 0) return {0.0, 1.0};
    double const n = static_cast<double>(trials);
    double const p = static_cast<double>(successes) / n;
    double const z2 = z * z;
    double const denom = 1.0 + z2 / n;
    double const centre = (p + z2 / (2.0 * n)) / denom;
    double const half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    // The exact bounds at 0 and n are 0 and 1; rounding would leave them off by an ulp.
    double const lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    double const hi = successes >= trials ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

double rule_of_three(std::uint64_t trials)
{
    return trials == 0 ? 1.0 : std::min(1.0, 3.0 / static_cast<double>(trials));
}

double percentile(std::span<const std::uint64_t> values, double q)
{
    if (values.empty()) return 0.0;
    std::vector<std::uint64_t> sorted(values.begin(), values.end());
    auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
    rank = std::clamp<std::size_t>(rank, 1, sorted.size());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(rank - 1),
                     sorted.end());
    return static_cast<double>(sorted[rank - 1]);
}

}  // namespace aesec
