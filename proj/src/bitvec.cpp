#include "aesec/bitvec.hpp"

#include <bit>

namespace aesec {

namespace {

constexpr std::uint64_t mask_bit(std::size_t i)
{
    return std::uint64_t{1} << (63 - (i & 63));
}

int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitVec::BitVec(std::size_t length) : length_(length)
{
    if (length > kMaxBits)
        throw UsageError("BitVec length " + std::to_string(length) + " exceeds 128");
}

BitVec BitVec::from_string(std::string_view bits)
{
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i)
    {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw UsageError("invalid bit character '" + std::string(1, bits[i]) + "'");
    }
    return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t length)
{
    if (hex.size() != (length + 3) / 4)
        throw UsageError("hex string of " + std::to_string(hex.size()) +
                         " digits does not encode " + std::to_string(length) + " bits");
    BitVec v(length);
    for (std::size_t d = 0; d < hex.size(); ++d)
    {
        int nib = hex_value(hex[d]);
        if (nib < 0)
            throw UsageError("invalid hex digit '" + std::string(1, hex[d]) + "'");
        for (std::size_t b = 0; b < 4; ++b)
        {
            if (!((nib >> (3 - b)) & 1)) continue;
            std::size_t pos = 4 * d + b;
            if (pos >= length)
                throw UsageError("nonzero pad bit in hex string");
            v.set(pos, true);
        }
    }
    return v;
}

BitVec BitVec::from_bytes(std::span<const std::uint8_t> bytes)
{
    BitVec v(bytes.size() * 8);
    for (std::size_t j = 0; j < bytes.size(); ++j)
        v.words_[j / 8] |= std::uint64_t{bytes[j]} << (56 - 8 * (j % 8));
    return v;
}

BitVec BitVec::from_words(std::uint64_t hi, std::uint64_t lo, std::size_t length)
{
    BitVec v(length);
    // Clear anything past the length so equality stays positional.
    auto keep = [](std::size_t bits) -> std::uint64_t {
        if (bits == 0) return 0;
        return bits >= 64 ? ~std::uint64_t{0} : ~std::uint64_t{0} << (64 - bits);
    };
    v.words_ = {hi & keep(length), lo & keep(length > 64 ? length - 64 : 0)};
    return v;
}

void BitVec::check_index(std::size_t i) const
{
    if (i >= length_)
        throw UsageError("bit index " + std::to_string(i) + " out of range for length " +
                         std::to_string(length_));
}

bool BitVec::get(std::size_t i) const
{
    check_index(i);
    return (words_[i / 64] & mask_bit(i)) != 0;
}

void BitVec::set(std::size_t i, bool value)
{
    check_index(i);
    if (value)
        words_[i / 64] |= mask_bit(i);
    else
        words_[i / 64] &= ~mask_bit(i);
}

void BitVec::flip(std::size_t i)
{
    check_index(i);
    words_[i / 64] ^= mask_bit(i);
}

std::size_t BitVec::weight() const
{
    return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
}

std::string BitVec::to_string() const
{
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

std::string BitVec::to_hex() const
{
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve((length_ + 3) / 4);
    for (std::size_t d = 0; d < (length_ + 3) / 4; ++d)
    {
        std::size_t pos = 4 * d;
        auto nib = (words_[pos / 64] >> (60 - (pos & 63))) & 0xF;
        s.push_back(digits[nib]);
    }
    return s;
}

std::array<std::uint8_t, 16> BitVec::to_bytes() const
{
    if (length_ % 8 != 0)
        throw UsageError("to_bytes requires a whole number of bytes");
    std::array<std::uint8_t, 16> out{};
    for (std::size_t j = 0; j < 16; ++j)
        out[j] = static_cast<std::uint8_t>(words_[j / 8] >> (56 - 8 * (j % 8)));
    return out;
}

BitVec& BitVec::operator^=(BitVec const& other)
{
    if (other.length_ != length_)
        throw UsageError("xor of vectors with lengths " + std::to_string(length_) + " and " +
                         std::to_string(other.length_));
    words_[0] ^= other.words_[0];
    words_[1] ^= other.words_[1];
    return *this;
}

BitVec bit_xor(BitVec const& a, BitVec const& b)
{
    BitVec r = a;
    r ^= b;
    return r;
}

std::size_t hamming_weight(BitVec const& a)
{
    return a.weight();
}

std::size_t hamming_distance(BitVec const& a, BitVec const& b)
{
    return bit_xor(a, b).weight();
}

BitVec slice(BitVec const& v, std::size_t first, std::size_t count)
{
    if (first + count > v.size())
        throw UsageError("slice [" + std::to_string(first) + ", " +
                         std::to_string(first + count) + ") exceeds length " +
                         std::to_string(v.size()));
    using u128 = unsigned __int128;
    u128 whole = (u128{v.word(0)} << 64) | v.word(1);
    whole = first >= BitVec::kMaxBits ? 0 : whole << first;
    return BitVec::from_words(static_cast<std::uint64_t>(whole >> 64),
                              static_cast<std::uint64_t>(whole), count);
}

BitVec concat(Message const& m, Padding const& p)
{
    using u128 = unsigned __int128;
    std::size_t n = m.size() + p.size();
    if (n > BitVec::kMaxBits)
        throw UsageError("concatenated length " + std::to_string(n) + " exceeds 128");
    u128 head = (u128{m.bits.word(0)} << 64) | m.bits.word(1);
    u128 tail = (u128{p.bits.word(0)} << 64) | p.bits.word(1);
    tail = m.size() >= BitVec::kMaxBits ? 0 : tail >> m.size();
    u128 whole = head | tail;
    return BitVec::from_words(static_cast<std::uint64_t>(whole >> 64),
                              static_cast<std::uint64_t>(whole), n);
}

std::pair<Message, BitVec> split(BitVec const& c, std::size_t k)
{
    if (k > c.size())
        throw UsageError("split point " + std::to_string(k) + " exceeds length " +
                         std::to_string(c.size()));
    return {Message{slice(c, 0, k)}, slice(c, k, c.size() - k)};
}

}  // namespace aesec
