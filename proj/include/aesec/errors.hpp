#pragma once

#include <stdexcept>

namespace aesec {

/// An operation was called with arguments that violate its preconditions
/// (length mismatches, out-of-range indices, malformed text).
class UsageError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Invalid code, channel or campaign configuration.
class ConfigError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace aesec
