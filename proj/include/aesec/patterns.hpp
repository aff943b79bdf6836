#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aesec {

/// A guessed noise sequence, given by the positions it flips.
///
/// For Hamming streams `positions` are bit positions and `weight` is the
/// Hamming weight. For logistic streams `positions` are 0-based reliability
/// ranks (rank r is stored as r - 1) and `weight` is the logistic weight,
/// the sum of the 1-based ranks.
struct NoisePattern
{
    std::vector<std::size_t> positions;  // ascending
    std::size_t weight = 0;

    friend bool operator==(NoisePattern const&, NoisePattern const&) = default;
};

/// All 2^n subsets of {0..n-1} in nondecreasing Hamming weight. Within a
/// weight, subsets come in increasing value of sum(2^p), i.e. position 0 is
/// the least significant bit for this ordering only (colexicographic order).
class HammingPatternStream
{
public:
    explicit HammingPatternStream(std::size_t n);

    /// Writes the next pattern into `out`; false once all 2^n are emitted.
    bool next(NoisePattern& out);

    std::size_t length() const { return n_; }

private:
    std::size_t n_;
    std::vector<std::size_t> current_;
    bool started_ = false;
    bool done_ = false;
};

/// All 2^n subsets of ranks {1..n} in nondecreasing rank sum. Equal sums are
/// ordered by subset size, then lexicographically on the ascending ranks.
///
/// Each step is O(subset size); nothing is materialised, so the stream is
/// usable at n = 128 where the pattern space is astronomically large.
class LogisticPatternStream
{
public:
    explicit LogisticPatternStream(std::size_t n);

    bool next(NoisePattern& out);

    std::size_t length() const { return n_; }

private:
    bool fill(std::size_t from, std::size_t sum, std::size_t lowest);
    bool advance_within_size();
    bool start_size(std::size_t size);

    std::size_t n_;
    std::size_t max_sum_;
    std::size_t sum_ = 0;
    std::size_t size_ = 0;
    std::vector<std::size_t> ranks_;  // 1-based, ascending
    bool started_ = false;
    bool done_ = false;
};

}  // namespace aesec
