#include "aesec/selftest.hpp"

#include "aesec/aes.hpp"
#include "aesec/channel.hpp"
#include "aesec/codes.hpp"
#include "aesec/grand.hpp"
#include "aesec/stats.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace aesec {

namespace {

struct Kat
{
    char const* key;
    char const* plaintext;
    char const* ciphertext;
};

// FIPS-197 Appendix B and C.1, plus the all-zero key/block.
constexpr Kat kKats[] = {
    {"000102030405060708090a0b0c0d0e0f", "00112233445566778899aabbccddeeff",
     "69c4e0d86a7b0430d8cdb78070b4c55a"},
    {"2b7e151628aed2a6abf7158809cf4f3c", "3243f6a8885a308d313198a2e0370734",
     "3925841d02dc09fbdc118597196a0b32"},
    {"00000000000000000000000000000000", "00000000000000000000000000000000",
     "66e94bd4ef8a2c3b884cfa59ca342b2e"},
};

SelftestCheck check_aes()
{
    SelftestCheck check{"aes-kat", true, ""};
    for (auto const& kat : kKats)
    {
        KeySchedule ks(AesKey::from_hex(kat.key));
        auto pt = BitVec::from_hex(kat.plaintext, 128);
        auto ct = encrypt_block(ks, pt);
        if (ct.to_hex() != kat.ciphertext || decrypt_block(ks, ct) != pt)
        {
            check.passed = false;
            check.detail += std::string("key ") + kat.key + ": got " + ct.to_hex() + "; ";
        }
    }
    KeySchedule fips(AesKey::from_hex("2b7e151628aed2a6abf7158809cf4f3c"));
    if (BitVec::from_bytes(fips.round_key(10)).to_hex() != "d014f9a8c9ee2589e13f0cc8b6630ca6")
    {
        check.passed = false;
        check.detail += "key expansion mismatch; ";
    }
    if (check.passed) check.detail = std::to_string(std::size(kKats)) + " vectors + key expansion";
    return check;
}

template <typename Stream>
bool stream_matches(std::size_t n, std::function<std::size_t(std::vector<std::size_t> const&)> key,
                    std::function<bool(std::vector<std::size_t> const&, std::vector<std::size_t> const&)> less)
{
    std::vector<std::vector<std::size_t>> expected;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    {
        std::vector<std::size_t> s;
        for (std::size_t p = 0; p < n; ++p)
            if (mask >> p & 1) s.push_back(p);
        expected.push_back(s);
    }
    std::sort(expected.begin(), expected.end(), less);

    Stream stream(n);
    NoisePattern pattern;
    std::size_t i = 0;
    while (stream.next(pattern))
    {
        if (i >= expected.size() || pattern.positions != expected[i] ||
            pattern.weight != key(expected[i]))
            return false;
        ++i;
    }
    return i == expected.size();
}

SelftestCheck check_generators()
{
    constexpr std::size_t n = 12;
    auto hamming_weight_of = [](std::vector<std::size_t> const& s) { return s.size(); };
    auto hamming_less = [](std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        auto value = [](std::vector<std::size_t> const& s) {
            std::uint32_t v = 0;
            for (auto p : s) v |= 1u << p;
            return v;
        };
        return value(a) < value(b);
    };
    auto rank_sum = [](std::vector<std::size_t> const& s) {
        std::size_t w = 0;
        for (auto p : s) w += p + 1;
        return w;
    };
    auto logistic_less = [&](std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
        if (rank_sum(a) != rank_sum(b)) return rank_sum(a) < rank_sum(b);
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    };
    bool ok_h = stream_matches<HammingPatternStream>(n, hamming_weight_of, hamming_less);
    bool ok_l = stream_matches<LogisticPatternStream>(n, rank_sum, logistic_less);
    std::ostringstream detail;
    detail << "n=12: hamming " << (ok_h ? "ok" : "MISMATCH") << ", logistic "
           << (ok_l ? "ok" : "MISMATCH");
    return {"pattern-completeness", ok_h && ok_l, detail.str()};
}

SelftestCheck check_ml()
{
    auto code = RlcCode::generate(CodeParams::make(8, 4), 42);
    std::vector<BitVec> codewords;
    for (std::uint32_t m = 0; m < 16; ++m)
        codewords.push_back(code.encode(Message{BitVec::from_words(std::uint64_t{m} << 60, 0, 4)}));

    std::size_t failures = 0;
    for (std::uint32_t y = 0; y < 256; ++y)
    {
        auto word = BitVec::from_words(std::uint64_t{y} << 56, 0, 8);
        std::size_t best = 8;
        for (auto const& c : codewords)
            best = std::min(best, hamming_distance(c, word));
        auto out = grand_decode(word, code, PatternBudget::unbounded());
        if (!out.decoded() || hamming_distance(*out.codeword, word) != best) ++failures;
    }
    return {"ml-equivalence", failures == 0,
            "[8,4] RLC, 256 words, " + std::to_string(failures) + " mismatches"};
}

SelftestCheck check_calibration()
{
    constexpr std::size_t n = 128;
    constexpr std::size_t blocks = 32000;  // 4.096e6 bits per point
    double const rate = 116.0 / 128.0;
    SelftestCheck check{"channel-calibration", true, ""};
    std::ostringstream detail;
    double const grid[] = {4.0, 6.0, 8.0};
    for (std::size_t i = 0; i < std::size(grid); ++i)
    {
        double const ebn0 = grid[i];
        auto point = ChannelPoint::make(ebn0, rate);
        auto rng = make_stream(1, i, 0, StreamPurpose::noise);
        std::vector<double> const zeros(n, 1.0);
        std::uint64_t flips = 0;
        for (std::size_t b = 0; b < blocks; ++b)
            flips += hard_decision(add_awgn(zeros, point.sigma, rng)).weight();
        auto ci = wilson_interval(flips, blocks * n);
        double expected = hard_flip_probability(point);
        bool ok = ci.contains(expected);
        check.passed = check.passed && ok;
        detail << ebn0 << "dB: " << static_cast<double>(flips) / (blocks * n) << " vs " << expected
               << (ok ? " ok; " : " OUTSIDE CI; ");
    }
    check.detail = detail.str();
    return check;
}

}  // namespace

std::vector<SelftestCheck> run_selftest()
{
    return {check_aes(), check_generators(), check_ml(), check_calibration()};
}

}  // namespace aesec
