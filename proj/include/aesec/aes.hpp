#pragma once

#include "aesec/bitvec.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

namespace aesec {

using AesBlock = std::array<std::uint8_t, 16>;

/// 128-bit AES key. The default-constructed key is the FIPS-197 example key
/// 000102...0e0f so that unconfigured runs are reproducible.
struct AesKey
{
    AesBlock bytes{0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07,
                   0x08, 0x09, 0x0a, 0x0b, 0x0c, 0x0d, 0x0e, 0x0f};

    /// Exactly 32 hex digits; throws UsageError otherwise.
    static AesKey from_hex(std::string_view hex);
    std::string to_hex() const;

    friend bool operator==(AesKey const&, AesKey const&) = default;
};

/// Expanded AES-128 key: 11 round keys for encryption plus the
/// equivalent-inverse-cipher keys used by decryption.
///
/// Immutable once built; encrypt/decrypt only read it, so one schedule can be
/// shared by any number of threads.
class KeySchedule
{
public:
    static constexpr std::size_t kRounds = 10;

    explicit KeySchedule(AesKey const& key);

    /// Round key r (0..10) as 16 bytes, FIPS-197 order.
    AesBlock round_key(std::size_t r) const;

    AesBlock encrypt(AesBlock const& in) const;
    AesBlock decrypt(AesBlock const& in) const;

    /// Word-level entry points: state column c is the big-endian 32-bit
    /// word at bytes 4c..4c+3. Used by the BitVec overloads.
    void encrypt_words(std::uint32_t state[4]) const;
    void decrypt_words(std::uint32_t state[4]) const;

private:
    std::array<std::uint32_t, 4 * (kRounds + 1)> enc_{};
    std::array<std::uint32_t, 4 * (kRounds + 1)> dec_{};
};

KeySchedule expand_key(AesKey const& key);

/// AES-128 encryption of a 128-bit block. Position 0 of the BitVec is the
/// most significant bit of input byte 0. Not constant-time.
BitVec encrypt_block(KeySchedule const& ks, BitVec const& plaintext);
BitVec decrypt_block(KeySchedule const& ks, BitVec const& ciphertext);

}  // namespace aesec
