#pragma once

#include "aesec/errors.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace aesec {

/// Binary vector of at most 128 positions.
///
/// Position 0 is the first transmitted bit. In every integer, hex or byte
/// rendering position 0 is the most significant bit: word 0 holds positions
/// 0..63 with position i at bit (63 - i), word 1 holds positions 64..127.
/// A 128-bit vector therefore maps onto 16 big-endian bytes exactly as
/// FIPS-197 numbers its input bits.
///
/// The length is fixed at construction; bits past the length are always 0.
class BitVec
{
public:
    static constexpr std::size_t kMaxBits = 128;

    BitVec() = default;
    explicit BitVec(std::size_t length);

    /// Parses a string of '0'/'1' characters, position 0 first.
    static BitVec from_string(std::string_view bits);
    /// Parses ceil(length/4) hex digits, big-endian by position. Pad bits
    /// past `length` in the final nibble must be zero.
    static BitVec from_hex(std::string_view hex, std::size_t length);
    static BitVec from_bytes(std::span<const std::uint8_t> bytes);
    static BitVec from_words(std::uint64_t hi, std::uint64_t lo, std::size_t length);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);
    void flip(std::size_t i);

    bool operator[](std::size_t i) const { return get(i); }

    std::size_t weight() const;
    bool is_zero() const { return words_[0] == 0 && words_[1] == 0; }

    std::string to_string() const;
    std::string to_hex() const;
    /// Requires size() to be a multiple of 8.
    std::array<std::uint8_t, 16> to_bytes() const;

    std::uint64_t word(std::size_t w) const { return words_[w]; }

    /// In-place XOR; lengths must match.
    BitVec& operator^=(BitVec const& other);

    friend bool operator==(BitVec const&, BitVec const&) = default;

private:
    void check_index(std::size_t i) const;

    std::array<std::uint64_t, 2> words_{0, 0};
    std::size_t length_ = 0;
};

BitVec bit_xor(BitVec const& a, BitVec const& b);
inline BitVec operator^(BitVec const& a, BitVec const& b) { return bit_xor(a, b); }

std::size_t hamming_weight(BitVec const& a);
std::size_t hamming_distance(BitVec const& a, BitVec const& b);

/// Positions [first, first + count) of `v` as a new vector.
BitVec slice(BitVec const& v, std::size_t first, std::size_t count);

/// A k-bit message.
struct Message
{
    BitVec bits;

    std::size_t size() const { return bits.size(); }
    friend bool operator==(Message const&, Message const&) = default;
};

/// The n-k bits appended after the message before encryption.
struct Padding
{
    BitVec bits;

    static Padding zeros(std::size_t length) { return Padding{BitVec(length)}; }
    std::size_t size() const { return bits.size(); }
    bool all_zero() const { return bits.is_zero(); }
    friend bool operator==(Padding const&, Padding const&) = default;
};

/// [m ; p]: the message in the first |m| positions, padding in the rest.
BitVec concat(Message const& m, Padding const& p);

/// Inverse of concat: (first k bits, remaining bits).
std::pair<Message, BitVec> split(BitVec const& c, std::size_t k);

}  // namespace aesec
