#include "aesec/codes.hpp"
#include "aesec/stats.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

namespace aesec {
namespace {

using testing::random_bits;
using testing::random_message;
using testing::word_of;

TEST(CodeParams, Validation)
{
    EXPECT_DOUBLE_EQ(CodeParams::make(128, 116).rate(), 116.0 / 128.0);
    EXPECT_EQ(CodeParams::make(128, 116).redundancy(), 12u);
    EXPECT_THROW(CodeParams::make(128, 0), ConfigError);
    EXPECT_THROW(CodeParams::make(128, 129), ConfigError);
    EXPECT_THROW(CodeParams::make(0, 0), ConfigError);
    EXPECT_THROW(CodeParams::make(129, 100), ConfigError);
    EXPECT_NO_THROW(CodeParams::make(4, 4));
}

// --- AES pad code --------------------------------------------------------------

class AesCodeTest : public ::testing::Test
{
protected:
    CodeParams params = CodeParams::make(128, 116);
    AesKey key{};
    KeySchedule ks{key};
    AesPadCode code{params, key};
};

TEST_F(AesCodeTest, ZeroMessageEncodesToEncryptedZeroBlock)
{
    EXPECT_EQ(code.encode(Message{BitVec(116)}), encrypt_block(ks, BitVec(128)));
    EXPECT_EQ(aes_encode(Message{BitVec(116)}, params, ks), encrypt_block(ks, BitVec(128)));
}

TEST_F(AesCodeTest, DecryptedCodewordEndsInTwelveZeros)
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1000; ++i)
    {
        Message m = random_message(116, rng);
        auto [head, tail] = split(decrypt_block(ks, aes_encode(m, params, ks)), 116);
        ASSERT_EQ(head, m);
        ASSERT_EQ(tail.size(), 12u);
        ASSERT_TRUE(tail.is_zero());
    }
}

TEST_F(AesCodeTest, EncodeIsInjective)
{
    std::mt19937_64 rng(32);
    std::set<std::string> messages, codewords;
    for (int i = 0; i < 10000; ++i)
    {
        Message m = random_message(116, rng);
        if (!messages.insert(m.bits.to_hex()).second) continue;
        codewords.insert(code.encode(m).to_hex());
    }
    EXPECT_EQ(codewords.size(), messages.size());
}

TEST_F(AesCodeTest, OracleRecoversEncodedMessage)
{
    std::mt19937_64 rng(33);
    for (int i = 0; i < 1000; ++i)
    {
        Message m = random_message(116, rng);
        BitVec c = code.encode(m);
        auto v = code.check(c);
        ASSERT_TRUE(v.has_value());
        ASSERT_EQ(*v, m);
        ASSERT_EQ(aes_oracle(c, params, ks), v);
    }
}

TEST_F(AesCodeTest, ConfigurationErrors)
{
    EXPECT_THROW(AesPadCode(CodeParams{64, 52}, key), ConfigError);
    EXPECT_THROW(aes_encode(Message{BitVec(52)}, CodeParams{64, 52}, ks), ConfigError);
    EXPECT_THROW(code.encode(Message{BitVec(115)}), UsageError);
}

TEST_F(AesCodeTest, RandomWordsAcceptedAtPaddingRate)
{
    std::mt19937_64 rng(34);
    constexpr std::uint64_t kWords = 1'000'000;
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < kWords; ++i)
        accepted += code.check(random_bits(128, rng)) ? 1 : 0;
    auto ci = wilson_interval(accepted, kWords);
    EXPECT_TRUE(ci.contains(std::ldexp(1.0, -12)))
        << accepted << " accepted, CI [" << ci.lo << ", " << ci.hi << "]";
}

TEST_F(AesCodeTest, SingleBitFlipsAreRejected)
{
    std::mt19937_64 rng(35);
    constexpr std::uint64_t kTrials = 200'000;
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < kTrials; ++i)
    {
        BitVec c = code.encode(random_message(116, rng));
        c.flip(rng() % 128);
        accepted += code.check(c) ? 1 : 0;
    }
    auto ci = wilson_interval(accepted, kTrials);
    EXPECT_TRUE(ci.contains(std::ldexp(1.0, -12))) << accepted << " of " << kTrials;
}

// --- RLC -------------------------------------------------------------------

bool orthogonal(RlcCode const& code)
{
    for (auto const& g : code.generator())
        for (auto const& h : code.parity_check())
        {
            std::size_t dot = 0;
            for (std::size_t i = 0; i < g.size(); ++i)
                dot += g.get(i) && h.get(i) ? 1 : 0;
            if (dot % 2) return false;
        }
    return true;
}

TEST(Rlc, GeneratorIsOrthogonalToParityCheck)
{
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 0xdeadbeefULL})
    {
        EXPECT_TRUE(orthogonal(rlc_generate(CodeParams::make(128, 116), seed)));
        EXPECT_TRUE(orthogonal(rlc_generate(CodeParams::make(8, 4), seed)));
        EXPECT_TRUE(orthogonal(rlc_generate(CodeParams::make(100, 30), seed)));
    }
}

TEST(Rlc, GeneratorIsSystematic)
{
    auto code = rlc_generate(CodeParams::make(128, 116), 42);
    for (std::size_t i = 0; i < 116; ++i)
    {
        BitVec unit(116);
        unit.set(i, true);
        ASSERT_EQ(slice(code.generator()[i], 0, 116), unit);
    }
}

TEST(Rlc, SameSeedSameCode)
{
    auto a = rlc_generate(CodeParams::make(128, 116), 42);
    auto b = rlc_generate(CodeParams::make(128, 116), 42);
    auto c = rlc_generate(CodeParams::make(128, 116), 43);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.parity_check(), b.parity_check());
    EXPECT_FALSE(a == c);
}

TEST(Rlc, RequiresRedundancy)
{
    EXPECT_THROW(rlc_generate(CodeParams::make(8, 8), 1), ConfigError);
}

TEST(Rlc, AllCodewordsOfSmallCodeHaveZeroSyndrome)
{
    auto code = rlc_generate(CodeParams::make(8, 4), 5);
    std::set<std::string> words;
    for (std::uint64_t m = 0; m < 16; ++m)
    {
        BitVec c = rlc_encode(Message{word_of(m, 4)}, code);
        EXPECT_TRUE(code.syndrome(c).is_zero());
        EXPECT_EQ(slice(c, 0, 4), word_of(m, 4));
        words.insert(c.to_string());
    }
    EXPECT_EQ(words.size(), 16u);
}

TEST(Rlc, EncodeBasics)
{
    auto code = rlc_generate(CodeParams::make(8, 4), 9);
    EXPECT_TRUE(rlc_encode(Message{BitVec(4)}, code).is_zero());
    EXPECT_EQ(slice(rlc_encode(Message{BitVec::from_string("1000")}, code), 0, 4),
              BitVec::from_string("1000"));
    EXPECT_THROW(rlc_encode(Message{BitVec(5)}, code), UsageError);
}

TEST(Rlc, SumOfCodewordsIsCodeword)
{
    auto code = rlc_generate(CodeParams::make(8, 4), 17);
    for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b)
        {
            BitVec sum = rlc_encode(Message{word_of(a, 4)}, code) ^
                         rlc_encode(Message{word_of(b, 4)}, code);
            auto v = rlc_oracle(sum, code);
            ASSERT_TRUE(v.has_value());
            EXPECT_EQ(v->bits, word_of(a ^ b, 4));
        }
}

TEST(Rlc, OracleRoundTrip)
{
    std::mt19937_64 rng(36);
    auto code = rlc_generate(CodeParams::make(128, 116), 42);
    for (int i = 0; i < 1000; ++i)
    {
        Message m = random_message(116, rng);
        auto v = rlc_oracle(rlc_encode(m, code), code);
        ASSERT_TRUE(v.has_value());
        ASSERT_EQ(*v, m);
    }
}

TEST(Rlc, RepetitionCode)
{
    auto code = RlcCode::from_parity(CodeParams::make(2, 1), {BitVec::from_string("1")});
    EXPECT_EQ(code.generator()[0], BitVec::from_string("11"));
    EXPECT_EQ(code.parity_check()[0], BitVec::from_string("11"));
    auto v = rlc_oracle(BitVec::from_string("11"), code);
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->bits, BitVec::from_string("1"));
    EXPECT_FALSE(rlc_oracle(BitVec::from_string("10"), code).has_value());
}

TEST(Rlc, RandomWordsAcceptedAtRedundancyRate)
{
    std::mt19937_64 rng(37);
    auto code = rlc_generate(CodeParams::make(128, 116), 42);
    constexpr std::uint64_t kWords = 1'000'000;
    std::uint64_t accepted = 0;
    for (std::uint64_t i = 0; i < kWords; ++i)
        accepted += code.check(random_bits(128, rng)) ? 1 : 0;
    EXPECT_TRUE(wilson_interval(accepted, kWords).contains(std::ldexp(1.0, -12))) << accepted;
}

TEST(Rlc, TextFormatRoundTrip)
{
    auto code = rlc_generate(CodeParams::make(128, 116), 42);
    std::string text = code.to_text();
    EXPECT_EQ(text.substr(0, text.find('\n')), "RLC 128 116 42");
    auto back = RlcCode::from_text("# archived\n" + text);
    EXPECT_EQ(back, code);
    EXPECT_EQ(back.seed(), std::optional<std::uint64_t>(42));
    EXPECT_EQ(back.parity_check(), code.parity_check());

    auto unseeded = RlcCode::from_parity(CodeParams::make(2, 1), {BitVec::from_string("1")});
    EXPECT_EQ(unseeded.to_text(), "RLC 2 1 -\n" "c\n");
    EXPECT_EQ(RlcCode::from_text(unseeded.to_text()), unseeded);
}

TEST(Rlc, TextFormatErrors)
{
    EXPECT_THROW(RlcCode::from_text(""), ConfigError);
    EXPECT_THROW(RlcCode::from_text("LDPC 2 1 -\nc\n"), ConfigError);
    EXPECT_THROW(RlcCode::from_text("RLC 2 1 -\n"), ConfigError);        // missing row
    EXPECT_THROW(RlcCode::from_text("RLC 2 1 -\n4\n"), ConfigError);     // not systematic
    EXPECT_THROW(RlcCode::from_text("RLC 2 1 -\nq\n"), ConfigError);     // not hex
    EXPECT_THROW(RlcCode::from_text("RLC 2 1 seven\nc\n"), ConfigError); // bad seed
}

TEST(Oracles, ShortWordsAreNotCodewords)
{
    AesPadCode aes(CodeParams::make(128, 116), AesKey{});
    auto rlc = rlc_generate(CodeParams::make(128, 116), 42);
    EXPECT_FALSE(aes.check(BitVec(127)).has_value());
    EXPECT_FALSE(rlc.check(BitVec(127)).has_value());
}

}  // namespace
}  // namespace aesec
