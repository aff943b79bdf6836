#pragma once

#include "aesec/bitvec.hpp"
#include "aesec/channel.hpp"
#include "aesec/codes.hpp"
#include "aesec/patterns.hpp"

#include <cstdint>
#include <limits>
#include <optional>

namespace aesec {

/// Cap on oracle calls per decode.
struct PatternBudget
{
    std::uint64_t max_queries = 1'000'000;

    static PatternBudget make(std::uint64_t max_queries);
    static PatternBudget unbounded()
    {
        return PatternBudget{std::numeric_limits<std::uint64_t>::max()};
    }
};

struct DecodeOutcome
{
    /// Decoded message, or nullopt when the search was abandoned.
    Verdict message;
    /// The accepted word y ^ z when decoded.
    std::optional<BitVec> codeword;
    /// Exact number of oracle invocations.
    std::uint64_t queries = 0;
    /// Weight of the accepted pattern (Hamming or logistic, per decoder).
    std::size_t final_weight = 0;

    bool decoded() const { return message.has_value(); }
    bool abandoned() const { return !message.has_value(); }
};

/// Hard-decision GRAND: query oracle(y ^ z) for z in Hamming order and stop
/// at the first accepted word. Abandons once the budget is spent (or, for
/// tiny n, once every pattern has been tried).
DecodeOutcome grand_decode(BitVec const& y_hard, MembershipOracle const& oracle,
                           PatternBudget budget);

/// ORBGRAND: hard-decide, rank positions by |LLR|, then flip rank subsets in
/// logistic-weight order.
DecodeOutcome orbgrand_decode(SoftWord const& w, MembershipOracle const& oracle,
                              PatternBudget budget);

enum class DecoderKind
{
    grand,
    orbgrand,
};

char const* to_string(DecoderKind kind);

}  // namespace aesec
