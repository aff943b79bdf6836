#pragma once

#include <cstdint>
#include <span>

namespace aesec {

struct Interval
{
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool overlaps(Interval const& other) const { return lo <= other.hi && other.lo <= hi; }
    friend bool operator==(Interval const&, Interval const&) = default;
};

/// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Wilson score interval for `successes` out of `trials`. An empty sample
/// gives [0, 1].
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = kZ95);

/// 95% upper bound on a proportion after zero events in `trials` (3/trials).
double rule_of_three(std::uint64_t trials);

/// Nearest-rank percentile (q in (0, 1]) of an unsorted sample; 0 if empty.
double percentile(std::span<const std::uint64_t> values, double q);

}  // namespace aesec
