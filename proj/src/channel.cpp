#include "aesec/channel.hpp"

#include "aesec/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace aesec {

double sigma_from_ebn0(double ebn0_db, double rate)
{
    if (!(rate > 0.0 && rate <= 1.0))
        throw ConfigError("rate must lie in (0, 1], got " + std::to_string(rate));
    if (!std::isfinite(ebn0_db))
        throw ConfigError("Eb/N0 must be finite");
    double ebn0 = std::pow(10.0, ebn0_db / 10.0);
    return std::sqrt(1.0 / (2.0 * rate * ebn0));
}

double noise_entropy_bits(double sigma)
{
    return 0.5 * std::log2(2.0 * std::numbers::pi * std::numbers::e * sigma * sigma);
}

ChannelPoint ChannelPoint::make(double ebn0_db, double rate)
{
    ChannelPoint p;
    p.ebn0_db = ebn0_db;
    p.rate = rate;
    p.sigma = sigma_from_ebn0(ebn0_db, rate);
    p.noise_entropy = noise_entropy_bits(p.sigma);
    return p;
}

std::vector<double> modulate(BitVec const& c)
{
    std::vector<double> x(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        x[i] = c.get(i) ? -1.0 : 1.0;
    return x;
}

SoftWord add_awgn(std::vector<double> const& x, double sigma, SplitMix64& rng)
{
    if (!(sigma > 0.0))
        throw ConfigError("noise standard deviation must be positive");
    std::normal_distribution<double> gauss(0.0, sigma);
    SoftWord w;
    w.sigma = sigma;
    w.samples.resize(x.size());
    w.llrs.resize(x.size());
    double const scale = 2.0 / (sigma * sigma);
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        w.samples[i] = x[i] + gauss(rng);
        w.llrs[i] = scale * w.samples[i];
    }
    return w;
}

BitVec hard_decision(SoftWord const& w)
{
    BitVec bits(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w.samples[i] < 0.0) bits.set(i, true);
    return bits;
}

std::vector<std::size_t> reliability_permutation(SoftWord const& w)
{
    std::vector<std::size_t> order(w.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(w.llrs[a]) < std::abs(w.llrs[b]);
    });
    return order;
}

double gaussian_q(double x)
{
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double hard_flip_probability(ChannelPoint const& point)
{
    return gaussian_q(1.0 / point.sigma);
}

}  // namespace aesec
