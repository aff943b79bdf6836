#include "aesec/patterns.hpp"

#include "aesec/errors.hpp"

namespace aesec {

HammingPatternStream::HammingPatternStream(std::size_t n) : n_(n)
{
    if (n == 0) throw UsageError("pattern length must be at least 1");
}

bool HammingPatternStream::next(NoisePattern& out)
{
    if (done_) return false;
    if (!started_)
    {
        started_ = true;
    }
    else
    {
        // Colex successor: bump the lowest element that has room, reset the
        // ones below it to 0..i-1.
        std::size_t const w = current_.size();
        std::size_t i = 0;
        while (i < w)
        {
            std::size_t limit = (i + 1 < w) ? current_[i + 1] : n_;
            if (current_[i] + 1 < limit) break;
            ++i;
        }
        if (i < w)
        {
            ++current_[i];
            for (std::size_t j = 0; j < i; ++j)
                current_[j] = j;
        }
        else if (w == n_)
        {
            done_ = true;
            return false;
        }
        else
        {
            current_.resize(w + 1);
            for (std::size_t j = 0; j <= w; ++j)
                current_[j] = j;
        }
    }
    out.positions.assign(current_.begin(), current_.end());
    out.weight = current_.size();
    return true;
}

LogisticPatternStream::LogisticPatternStream(std::size_t n) : n_(n), max_sum_(n * (n + 1) / 2)
{
    if (n == 0) throw UsageError("pattern length must be at least 1");
    ranks_.reserve(n);
}

// Largest sum of q distinct ranks from {1..n}.
static std::size_t top_sum(std::size_t q, std::size_t n)
{
    return q * n - q * (q - 1) / 2;
}

// Lexicographically smallest ascending ranks_[from..size_) with the given sum,
// every element >= lowest. Returns false if no such completion exists.
bool LogisticPatternStream::fill(std::size_t from, std::size_t sum, std::size_t lowest)
{
    std::size_t const count = size_ - from;
    if (count == 0) return sum == 0;
    if (lowest + count - 1 > n_) return false;
    std::size_t const min_sum = count * lowest + count * (count - 1) / 2;
    if (sum < min_sum || sum > top_sum(count, n_)) return false;

    for (std::size_t j = from; j < size_; ++j)
    {
        std::size_t const rest = size_ - j - 1;
        std::size_t const rest_max = top_sum(rest, n_);
        std::size_t v = lowest;
        if (sum > rest_max && sum - rest_max > v) v = sum - rest_max;
        ranks_[j] = v;
        sum -= v;
        lowest = v + 1;
    }
    return true;
}

bool LogisticPatternStream::advance_within_size()
{
    if (size_ < 2) return false;
    std::size_t tail = ranks_[size_ - 1];
    for (std::size_t i = size_ - 1; i-- > 0;)
    {
        tail += ranks_[i];
        std::size_t const bumped = ranks_[i] + 1;
        // Raising ranks_[i] by one is the only candidate: a larger raise
        // leaves even less sum for an even higher floor.
        if (fill(i + 1, tail - bumped, bumped + 1))
        {
            ranks_[i] = bumped;
            return true;
        }
    }
    return false;
}

bool LogisticPatternStream::start_size(std::size_t size)
{
    size_ = size;
    ranks_.assign(size, 0);
    return fill(0, sum_, 1);
}

bool LogisticPatternStream::next(NoisePattern& out)
{
    if (done_) return false;
    if (!started_)
    {
        started_ = true;
        size_ = 0;
        ranks_.clear();
    }
    else if (!advance_within_size())
    {
        bool found = false;
        while (!found)
        {
            std::size_t next_size = size_ + 1;
            if (next_size > n_ || next_size * (next_size + 1) / 2 > sum_)
            {
                ++sum_;
                if (sum_ > max_sum_)
                {
                    done_ = true;
                    return false;
                }
                next_size = 1;
            }
            found = start_size(next_size);
            if (!found) size_ = next_size;
        }
    }
    out.positions.resize(size_);
    for (std::size_t j = 0; j < size_; ++j)
        out.positions[j] = ranks_[j] - 1;
    out.weight = sum_;
    return true;
}

}  // namespace aesec
