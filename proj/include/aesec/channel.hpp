#pragma once

#include "aesec/bitvec.hpp"
#include "aesec/rng.hpp"

#include <cstddef>
#include <vector>

namespace aesec {

/// One operating point of the BPSK/AWGN channel.
///
/// Unit-energy symbols, noise variance sigma^2 = N0/2 per real dimension, so
/// Eb/N0 = 1 / (2 R sigma^2). The receiver is assumed to know sigma exactly.
struct ChannelPoint
{
    double ebn0_db = 0.0;
    double rate = 1.0;
    double sigma = 1.0;
    /// Differential entropy h(N) = 0.5 log2(2 pi e sigma^2) in bits. Reported
    /// only; nothing consumes it.
    double noise_entropy = 0.0;

    static ChannelPoint make(double ebn0_db, double rate);
};

double sigma_from_ebn0(double ebn0_db, double rate);
double noise_entropy_bits(double sigma);

/// Received samples y = x + n and their LLRs 2y/sigma^2 (positive favours 0).
struct SoftWord
{
    std::vector<double> samples;
    std::vector<double> llrs;
    double sigma = 1.0;

    std::size_t size() const { return samples.size(); }
};

/// BPSK: bit 0 -> +1, bit 1 -> -1.
std::vector<double> modulate(BitVec const& c);

/// Adds i.i.d. N(0, sigma^2) noise drawn from `rng`.
SoftWord add_awgn(std::vector<double> const& x, double sigma, SplitMix64& rng);

/// Sign rule: y >= 0 -> 0, y < 0 -> 1.
BitVec hard_decision(SoftWord const& w);

/// Positions sorted by |llr| ascending (least reliable first), ties broken by
/// position.
std::vector<std::size_t> reliability_permutation(SoftWord const& w);

/// Gaussian tail Q(x) = P(N(0,1) > x).
double gaussian_q(double x);

/// Raw channel bit-flip probability after hard decision, Q(1/sigma).
double hard_flip_probability(ChannelPoint const& point);

}  // namespace aesec
