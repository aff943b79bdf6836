#include "aesec/aes.hpp"

namespace aesec {

namespace {

constexpr std::uint8_t xtime(std::uint8_t a)
{
    return static_cast<std::uint8_t>((a << 1) ^ ((a & 0x80) ? 0x1b : 0x00));
}

constexpr std::uint8_t gmul(std::uint8_t a, std::uint8_t b)
{
    std::uint8_t r = 0;
    while (b)
    {
        if (b & 1) r ^= a;
        a = xtime(a);
        b >>= 1;
    }
    return r;
}

constexpr std::uint8_t rotl8(std::uint8_t x, int s)
{
    return static_cast<std::uint8_t>((x << s) | (x >> (8 - s)));
}

// S-box from the multiplicative inverse in GF(2^8) followed by the affine map.
constexpr std::array<std::uint8_t, 256> make_sbox()
{
    std::array<std::uint8_t, 256> s{};
    for (int x = 0; x < 256; ++x)
    {
        std::uint8_t inv = 0;
        for (int y = 1; y < 256 && x != 0; ++y)
        {
            if (gmul(static_cast<std::uint8_t>(x), static_cast<std::uint8_t>(y)) == 1)
            {
                inv = static_cast<std::uint8_t>(y);
                break;
            }
        }
        s[x] = static_cast<std::uint8_t>(inv ^ rotl8(inv, 1) ^ rotl8(inv, 2) ^ rotl8(inv, 3) ^
                                         rotl8(inv, 4) ^ 0x63);
    }
#ifdef AESEC_FAULT_INJECT_SBOX
    // Test-only build: one corrupted entry must be caught by the KATs.
    s[0x00] ^= 0x01;
#endif
    return s;
}

constexpr std::array<std::uint8_t, 256> make_inv_sbox(std::array<std::uint8_t, 256> const& s)
{
    std::array<std::uint8_t, 256> inv{};
    for (int x = 0; x < 256; ++x)
        inv[s[x]] = static_cast<std::uint8_t>(x);
    return inv;
}

constexpr std::uint32_t pack(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d)
{
    return (std::uint32_t{a} << 24) | (std::uint32_t{b} << 16) | (std::uint32_t{c} << 8) | d;
}

constexpr std::uint32_t rotr32(std::uint32_t x, int s)
{
    return s == 0 ? x : (x >> s) | (x << (32 - s));
}

using Table = std::array<std::uint32_t, 256>;

constexpr auto kSbox = make_sbox();
constexpr auto kInvSbox = make_inv_sbox(kSbox);

constexpr Table make_te(int rot)
{
    Table t{};
    for (int x = 0; x < 256; ++x)
    {
        std::uint8_t s = kSbox[x];
        t[x] = rotr32(pack(gmul(s, 2), s, s, gmul(s, 3)), 8 * rot);
    }
    return t;
}

constexpr Table make_td(int rot)
{
    Table t{};
    for (int x = 0; x < 256; ++x)
    {
        std::uint8_t s = kInvSbox[x];
        t[x] = rotr32(pack(gmul(s, 14), gmul(s, 9), gmul(s, 13), gmul(s, 11)), 8 * rot);
    }
    return t;
}

constexpr Table kTe0 = make_te(0), kTe1 = make_te(1), kTe2 = make_te(2), kTe3 = make_te(3);
constexpr Table kTd0 = make_td(0), kTd1 = make_td(1), kTd2 = make_td(2), kTd3 = make_td(3);

inline std::uint8_t byte_of(std::uint32_t w, int i)
{
    return static_cast<std::uint8_t>(w >> (24 - 8 * i));
}

std::uint32_t sub_word(std::uint32_t w)
{
    return pack(kSbox[byte_of(w, 0)], kSbox[byte_of(w, 1)], kSbox[byte_of(w, 2)],
                kSbox[byte_of(w, 3)]);
}

std::uint32_t inv_mix_column(std::uint32_t w)
{
    // Td tables fold InvSubBytes in, so feed them S[b] to get InvMixColumns alone.
    return kTd0[kSbox[byte_of(w, 0)]] ^ kTd1[kSbox[byte_of(w, 1)]] ^
           kTd2[kSbox[byte_of(w, 2)]] ^ kTd3[kSbox[byte_of(w, 3)]];
}

int hex_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

void load(AesBlock const& in, std::uint32_t s[4])
{
    for (int c = 0; c < 4; ++c)
        s[c] = pack(in[4 * c], in[4 * c + 1], in[4 * c + 2], in[4 * c + 3]);
}

AesBlock store(std::uint32_t const s[4])
{
    AesBlock out{};
    for (int c = 0; c < 4; ++c)
        for (int i = 0; i < 4; ++i)
            out[4 * c + i] = byte_of(s[c], i);
    return out;
}

void check_block(BitVec const& v)
{
    if (v.size() != 128)
        throw UsageError("AES block must be 128 bits, got " + std::to_string(v.size()));
}

}  // namespace

AesKey AesKey::from_hex(std::string_view hex)
{
    if (hex.size() != 32)
        throw UsageError("AES-128 key must be 32 hex digits, got " + std::to_string(hex.size()));
    AesKey key;
    for (std::size_t i = 0; i < 16; ++i)
    {
        int hi = hex_value(hex[2 * i]);
        int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) throw UsageError("AES key contains a non-hex digit");
        key.bytes[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return key;
}

std::string AesKey::to_hex() const
{
    return BitVec::from_bytes(bytes).to_hex();
}

KeySchedule::KeySchedule(AesKey const& key)
{
    for (int i = 0; i < 4; ++i)
        enc_[i] = pack(key.bytes[4 * i], key.bytes[4 * i + 1], key.bytes[4 * i + 2],
                       key.bytes[4 * i + 3]);
    std::uint8_t rcon = 0x01;
    for (std::size_t i = 4; i < enc_.size(); ++i)
    {
        std::uint32_t t = enc_[i - 1];
        if (i % 4 == 0)
        {
            t = sub_word((t << 8) | (t >> 24)) ^ (std::uint32_t{rcon} << 24);
            rcon = xtime(rcon);
        }
        enc_[i] = enc_[i - 4] ^ t;
    }

    // Equivalent inverse cipher: reverse round order, InvMixColumns on the
    // middle rounds.
    for (std::size_t r = 0; r <= kRounds; ++r)
        for (int c = 0; c < 4; ++c)
        {
            std::uint32_t w = enc_[4 * (kRounds - r) + c];
            dec_[4 * r + c] = (r == 0 || r == kRounds) ? w : inv_mix_column(w);
        }
}

AesBlock KeySchedule::round_key(std::size_t r) const
{
    if (r > kRounds) throw UsageError("round index out of range");
    return store(&enc_[4 * r]);
}

void KeySchedule::encrypt_words(std::uint32_t s[4]) const
{
    std::uint32_t const* rk = enc_.data();
    std::uint32_t s0 = s[0] ^ rk[0], s1 = s[1] ^ rk[1], s2 = s[2] ^ rk[2], s3 = s[3] ^ rk[3];
    for (std::size_t r = 1; r < kRounds; ++r)
    {
        rk += 4;
        std::uint32_t t0 = kTe0[s0 >> 24] ^ kTe1[(s1 >> 16) & 0xff] ^ kTe2[(s2 >> 8) & 0xff] ^
                           kTe3[s3 & 0xff] ^ rk[0];
        std::uint32_t t1 = kTe0[s1 >> 24] ^ kTe1[(s2 >> 16) & 0xff] ^ kTe2[(s3 >> 8) & 0xff] ^
                           kTe3[s0 & 0xff] ^ rk[1];
        std::uint32_t t2 = kTe0[s2 >> 24] ^ kTe1[(s3 >> 16) & 0xff] ^ kTe2[(s0 >> 8) & 0xff] ^
                           kTe3[s1 & 0xff] ^ rk[2];
        std::uint32_t t3 = kTe0[s3 >> 24] ^ kTe1[(s0 >> 16) & 0xff] ^ kTe2[(s1 >> 8) & 0xff] ^
                           kTe3[s2 & 0xff] ^ rk[3];
        s0 = t0;
        s1 = t1;
        s2 = t2;
        s3 = t3;
    }
    rk += 4;
    auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return pack(kSbox[a >> 24], kSbox[(b >> 16) & 0xff], kSbox[(c >> 8) & 0xff],
                    kSbox[d & 0xff]);
    };
    s[0] = last(s0, s1, s2, s3) ^ rk[0];
    s[1] = last(s1, s2, s3, s0) ^ rk[1];
    s[2] = last(s2, s3, s0, s1) ^ rk[2];
    s[3] = last(s3, s0, s1, s2) ^ rk[3];
}

void KeySchedule::decrypt_words(std::uint32_t s[4]) const
{
    std::uint32_t const* rk = dec_.data();
    std::uint32_t s0 = s[0] ^ rk[0], s1 = s[1] ^ rk[1], s2 = s[2] ^ rk[2], s3 = s[3] ^ rk[3];
    for (std::size_t r = 1; r < kRounds; ++r)
    {
        rk += 4;
        std::uint32_t t0 = kTd0[s0 >> 24] ^ kTd1[(s3 >> 16) & 0xff] ^ kTd2[(s2 >> 8) & 0xff] ^
                           kTd3[s1 & 0xff] ^ rk[0];
        std::uint32_t t1 = kTd0[s1 >> 24] ^ kTd1[(s0 >> 16) & 0xff] ^ kTd2[(s3 >> 8) & 0xff] ^
                           kTd3[s2 & 0xff] ^ rk[1];
        std::uint32_t t2 = kTd0[s2 >> 24] ^ kTd1[(s1 >> 16) & 0xff] ^ kTd2[(s0 >> 8) & 0xff] ^
                           kTd3[s3 & 0xff] ^ rk[2];
        std::uint32_t t3 = kTd0[s3 >> 24] ^ kTd1[(s2 >> 16) & 0xff] ^ kTd2[(s1 >> 8) & 0xff] ^
                           kTd3[s0 & 0xff] ^ rk[3];
        s0 = t0;
        s1 = t1;
        s2 = t2;
        s3 = t3;
    }
    rk += 4;
    auto last = [](std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
        return pack(kInvSbox[a >> 24], kInvSbox[(b >> 16) & 0xff], kInvSbox[(c >> 8) & 0xff],
                    kInvSbox[d & 0xff]);
    };
    s[0] = last(s0, s3, s2, s1) ^ rk[0];
    s[1] = last(s1, s0, s3, s2) ^ rk[1];
    s[2] = last(s2, s1, s0, s3) ^ rk[2];
    s[3] = last(s3, s2, s1, s0) ^ rk[3];
}

AesBlock KeySchedule::encrypt(AesBlock const& in) const
{
    std::uint32_t s[4];
    load(in, s);
    encrypt_words(s);
    return store(s);
}

AesBlock KeySchedule::decrypt(AesBlock const& in) const
{
    std::uint32_t s[4];
    load(in, s);
    decrypt_words(s);
    return store(s);
}

KeySchedule expand_key(AesKey const& key)
{
    return KeySchedule(key);
}

BitVec encrypt_block(KeySchedule const& ks, BitVec const& plaintext)
{
    check_block(plaintext);
    std::uint32_t s[4] = {
        static_cast<std::uint32_t>(plaintext.word(0) >> 32),
        static_cast<std::uint32_t>(plaintext.word(0)),
        static_cast<std::uint32_t>(plaintext.word(1) >> 32),
        static_cast<std::uint32_t>(plaintext.word(1)),
    };
    ks.encrypt_words(s);
    return BitVec::from_words((std::uint64_t{s[0]} << 32) | s[1],
                              (std::uint64_t{s[2]} << 32) | s[3], 128);
}

BitVec decrypt_block(KeySchedule const& ks, BitVec const& ciphertext)
{
    check_block(ciphertext);
    std::uint32_t s[4] = {
        static_cast<std::uint32_t>(ciphertext.word(0) >> 32),
        static_cast<std::uint32_t>(ciphertext.word(0)),
        static_cast<std::uint32_t>(ciphertext.word(1) >> 32),
        static_cast<std::uint32_t>(ciphertext.word(1)),
    };
    ks.decrypt_words(s);
    return BitVec::from_words((std::uint64_t{s[0]} << 32) | s[1],
                              (std::uint64_t{s[2]} << 32) | s[3], 128);
}

}  // namespace aesec
