#pragma once

#include <cstdint>
#include <limits>

namespace aesec {

/// SplitMix64: a counter-based generator (state advances by a fixed odd
/// constant, output is a bijective mix of the state). Satisfies
/// UniformRandomBitGenerator, so it plugs into <random> distributions.
class SplitMix64
{
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z)
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// What a substream is used for. Keeping purposes apart means the channel
/// noise of a trial never depends on how many message bits were drawn.
enum class StreamPurpose : std::uint64_t
{
    message = 1,
    noise = 2,
};

/// Seed for the substream identified by (master, point, trial, purpose).
/// Independent of code, decoder and worker count, so AES and RLC runs that
/// share a master seed see the same channel noise trial by trial.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master, std::uint64_t point,
                                           std::uint64_t trial, StreamPurpose purpose)
{
    std::uint64_t h = SplitMix64::mix(master ^ 0x6a09e667f3bcc908ULL);
    h = SplitMix64::mix(h ^ (point + 0xbb67ae8584caa73bULL));
    h = SplitMix64::mix(h ^ (trial + 0x3c6ef372fe94f82bULL));
    h = SplitMix64::mix(h ^ (static_cast<std::uint64_t>(purpose) + 0xa54ff53a5f1d36f1ULL));
    return h;
}

inline SplitMix64 make_stream(std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                              StreamPurpose purpose)
{
    return SplitMix64(derive_stream_seed(master, point, trial, purpose));
}

}  // namespace aesec
