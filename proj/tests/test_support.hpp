#pragma once

#include "aesec/bitvec.hpp"
#include "aesec/codes.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace aesec::testing {

inline BitVec random_bits(std::size_t n, std::mt19937_64& rng)
{
    return BitVec::from_words(rng(), rng(), n);
}

inline Message random_message(std::size_t k, std::mt19937_64& rng)
{
    return Message{random_bits(k, rng)};
}

/// n-bit word whose integer rendering (position 0 most significant) is v.
inline BitVec word_of(std::uint64_t v, std::size_t n)
{
    return BitVec::from_words(n == 0 ? 0 : v << (64 - n), 0, n);
}

/// Accepts exactly one word; counts its invocations.
class SingleWordOracle final : public MembershipOracle
{
public:
    explicit SingleWordOracle(BitVec target) : target_(std::move(target)) {}

    std::size_t length() const override { return target_.size(); }
    Verdict check(BitVec const& word) const override
    {
        ++calls;
        if (word == target_) return Message{word};
        return std::nullopt;
    }

    mutable std::uint64_t calls = 0;

private:
    BitVec target_;
};

/// Wraps an oracle and counts calls.
class CountingOracle final : public MembershipOracle
{
public:
    explicit CountingOracle(MembershipOracle const& inner) : inner_(inner) {}

    std::size_t length() const override { return inner_.length(); }
    Verdict check(BitVec const& word) const override
    {
        ++calls;
        return inner_.check(word);
    }

    mutable std::uint64_t calls = 0;

private:
    MembershipOracle const& inner_;
};

}  // namespace aesec::testing
