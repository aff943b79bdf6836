#include "aesec/bitvec.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

namespace aesec {
namespace {

using testing::random_bits;

BitVec bits(char const* s)
{
    return BitVec::from_string(s);
}

TEST(BitVec, XorExamples)
{
    EXPECT_EQ(bit_xor(bits("1100"), bits("0000")), bits("1100"));
    EXPECT_EQ(bit_xor(bits("1100"), bits("1100")), bits("0000"));
    EXPECT_EQ(bit_xor(bits("1010"), bits("0110")), bits("1100"));
}

TEST(BitVec, XorLengthMismatchIsUsageError)
{
    EXPECT_THROW(bit_xor(bits("101"), bits("1010")), UsageError);
}

TEST(BitVec, HammingWeightExamples)
{
    EXPECT_EQ(hamming_weight(bits("0000")), 0u);
    EXPECT_EQ(hamming_weight(bits("1111")), 4u);
    EXPECT_EQ(hamming_weight(bits("0110")), 2u);
}

TEST(BitVec, ConcatExamples)
{
    EXPECT_EQ(concat(Message{bits("10")}, Padding{bits("00")}), bits("1000"));
    EXPECT_EQ(concat(Message{bits("1111")}, Padding{BitVec(0)}), bits("1111"));

    std::mt19937_64 rng(7);
    Message m{random_bits(116, rng)};
    BitVec block = concat(m, Padding::zeros(12));
    ASSERT_EQ(block.size(), 128u);
    EXPECT_EQ(slice(block, 0, 116), m.bits);
    EXPECT_TRUE(slice(block, 116, 12).is_zero());
}

TEST(BitVec, ConcatBeyond128IsUsageError)
{
    EXPECT_THROW(concat(Message{BitVec(100)}, Padding::zeros(29)), UsageError);
}

TEST(BitVec, SplitExamples)
{
    auto [m, p] = split(bits("1000"), 2);
    EXPECT_EQ(m.bits, bits("10"));
    EXPECT_EQ(p, bits("00"));

    auto [m4, p4] = split(bits("1111"), 4);
    EXPECT_EQ(m4.bits, bits("1111"));
    EXPECT_TRUE(p4.empty());

    EXPECT_THROW(split(bits("1111"), 5), UsageError);
}

TEST(BitVec, PositionZeroIsMostSignificant)
{
    auto v = BitVec::from_string("1000000000000001");
    EXPECT_EQ(v.to_hex(), "8001");
    EXPECT_EQ(v.word(0) >> 48, 0x8001u);
    EXPECT_EQ(BitVec::from_string("101").to_hex(), "a");
    EXPECT_EQ(BitVec::from_hex("a", 3), BitVec::from_string("101"));
    EXPECT_THROW(BitVec::from_hex("b", 3), UsageError);  // pad bit set
    EXPECT_THROW(BitVec::from_hex("zz", 8), UsageError);
    EXPECT_THROW(BitVec::from_string("10x"), UsageError);

    std::array<std::uint8_t, 2> bytes{0x80, 0x01};
    EXPECT_EQ(BitVec::from_bytes(bytes), v);
}

TEST(BitVec, IndexAndLengthChecks)
{
    BitVec v(5);
    EXPECT_THROW(v.get(5), UsageError);
    EXPECT_THROW(v.set(7, true), UsageError);
    EXPECT_THROW(BitVec(129), UsageError);
    EXPECT_THROW(BitVec(12).to_bytes(), UsageError);
}

TEST(BitVec, FromWordsClearsBitsPastLength)
{
    auto v = BitVec::from_words(~0ULL, ~0ULL, 70);
    EXPECT_EQ(v.weight(), 70u);
    EXPECT_EQ(v, BitVec::from_string(std::string(70, '1')));
}

// Properties over random lengths and contents.
TEST(BitVecProperty, SplitInvertsConcat)
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; ++trial)
    {
        std::size_t n = 1 + rng() % 128;
        std::size_t k = rng() % (n + 1);
        Message m{random_bits(k, rng)};
        BitVec p = random_bits(n - k, rng);
        auto [m2, p2] = split(concat(m, Padding{p}), k);
        ASSERT_EQ(m2, m);
        ASSERT_EQ(p2, p);
    }
}

TEST(BitVecProperty, XorAlgebra)
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 2000; ++trial)
    {
        std::size_t n = 1 + rng() % 128;
        BitVec a = random_bits(n, rng), b = random_bits(n, rng), c = random_bits(n, rng);
        ASSERT_EQ(bit_xor(bit_xor(a, b), c), bit_xor(a, bit_xor(b, c)));
        ASSERT_EQ(bit_xor(a, b), bit_xor(b, a));
        ASSERT_EQ(bit_xor(bit_xor(a, b), b), a);

        std::size_t differing = 0;
        for (std::size_t i = 0; i < n; ++i)
            differing += a.get(i) != b.get(i) ? 1 : 0;
        ASSERT_EQ(hamming_weight(bit_xor(a, b)), differing);
    }
}

TEST(BitVecProperty, TextRoundTrips)
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial)
    {
        std::size_t n = rng() % 129;
        BitVec a = random_bits(n, rng);
        ASSERT_EQ(BitVec::from_hex(a.to_hex(), n), a);
        ASSERT_EQ(BitVec::from_string(a.to_string()), a);
    }
}

}  // namespace
}  // namespace aesec
