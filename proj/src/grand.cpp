#include "aesec/grand.hpp"

#include <string>

namespace aesec {

namespace {

void check_length(std::size_t got, MembershipOracle const& oracle)
{
    if (got != oracle.length())
        throw UsageError("received word has " + std::to_string(got) + " bits, code length is " +
                         std::to_string(oracle.length()));
}

// Shared guessing loop; `position_of` maps a pattern entry to a bit position.
template <typename Stream, typename PositionOf>
DecodeOutcome guess(BitVec const& base, Stream stream, MembershipOracle const& oracle,
                    PatternBudget budget, PositionOf position_of)
{
    DecodeOutcome outcome;
    NoisePattern pattern;
    while (outcome.queries < budget.max_queries && stream.next(pattern))
    {
        BitVec candidate = base;
        for (std::size_t p : pattern.positions)
            candidate.flip(position_of(p));
        ++outcome.queries;
        if (auto verdict = oracle.check(candidate))
        {
            outcome.message = std::move(verdict);
            outcome.codeword = candidate;
            outcome.final_weight = pattern.weight;
            return outcome;
        }
    }
    return outcome;
}

}  // namespace

PatternBudget PatternBudget::make(std::uint64_t max_queries)
{
    if (max_queries < 1) throw ConfigError("max_queries must be at least 1");
    return PatternBudget{max_queries};
}

DecodeOutcome grand_decode(BitVec const& y_hard, MembershipOracle const& oracle,
                           PatternBudget budget)
{
    check_length(y_hard.size(), oracle);
    return guess(y_hard, HammingPatternStream(y_hard.size()), oracle, budget,
                 [](std::size_t p) { return p; });
}

DecodeOutcome orbgrand_decode(SoftWord const& w, MembershipOracle const& oracle,
                              PatternBudget budget)
{
    check_length(w.size(), oracle);
    BitVec const hard = hard_decision(w);
    auto const order = reliability_permutation(w);
    return guess(hard, LogisticPatternStream(w.size()), oracle, budget,
                 [&order](std::size_t rank) { return order[rank]; });
}

char const* to_string(DecoderKind kind)
{
    switch (kind)
    {
    case DecoderKind::grand: return "GRAND";
    case DecoderKind::orbgrand: return "ORBGRAND";
    }
    return "?";
}

}  // namespace aesec
