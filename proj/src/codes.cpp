#include "aesec/codes.hpp"

#include <bit>
#include <random>
#include <sstream>
#include <tuple>

namespace aesec {

namespace {

// Mask selecting positions [first, 128) in the two-word layout.
std::pair<std::uint64_t, std::uint64_t> tail_mask(std::size_t first)
{
    using u128 = unsigned __int128;
    u128 all = ~u128{0};
    u128 m = first >= 128 ? 0 : all >> first;
    return {static_cast<std::uint64_t>(m >> 64), static_cast<std::uint64_t>(m)};
}

void require_aes_params(CodeParams const& params)
{
    if (params.n != 128)
        throw ConfigError("AES code requires n = 128 (the AES block size), got n = " +
                          std::to_string(params.n));
}

void require_message(Message const& m, CodeParams const& params)
{
    if (m.size() != params.k)
        throw UsageError("message has " + std::to_string(m.size()) + " bits, code expects k = " +
                         std::to_string(params.k));
}

Verdict check_padding(BitVec const& plain, std::size_t k, std::uint64_t mask_hi,
                      std::uint64_t mask_lo)
{
    if ((plain.word(0) & mask_hi) != 0 || (plain.word(1) & mask_lo) != 0) return std::nullopt;
    return Message{slice(plain, 0, k)};
}

}  // namespace

CodeParams CodeParams::make(std::size_t n, std::size_t k)
{
    if (n == 0 || n > BitVec::kMaxBits)
        throw ConfigError("n must be in 1..128, got " + std::to_string(n));
    if (k == 0 || k > n)
        throw ConfigError("k must satisfy 0 < k <= n, got k = " + std::to_string(k) +
                          ", n = " + std::to_string(n));
    return CodeParams{n, k};
}

// --- AES ---------------------------------------------------------------------

AesPadCode::AesPadCode(CodeParams params, AesKey const& key)
    : params_(CodeParams::make(params.n, params.k)), key_(key), schedule_(key)
{
    require_aes_params(params_);
    std::tie(pad_mask_hi_, pad_mask_lo_) = tail_mask(params_.k);
}

BitVec AesPadCode::encode(Message const& m) const
{
    require_message(m, params_);
    return encrypt_block(schedule_, concat(m, Padding::zeros(params_.n - params_.k)));
}

Verdict AesPadCode::check(BitVec const& word) const
{
    if (word.size() != params_.n) return std::nullopt;
    return check_padding(decrypt_block(schedule_, word), params_.k, pad_mask_hi_, pad_mask_lo_);
}

BitVec aes_encode(Message const& m, CodeParams const& params, KeySchedule const& ks)
{
    require_aes_params(params);
    require_message(m, params);
    return encrypt_block(ks, concat(m, Padding::zeros(params.n - params.k)));
}

Verdict aes_oracle(BitVec const& c, CodeParams const& params, KeySchedule const& ks)
{
    require_aes_params(params);
    auto [hi, lo] = tail_mask(params.k);
    return check_padding(decrypt_block(ks, c), params.k, hi, lo);
}

// --- RLC ---------------------------------------------------------------------

RlcCode::RlcCode(CodeParams params, std::vector<BitVec> parity_rows,
                 std::optional<std::uint64_t> seed)
    : params_(params), seed_(seed)
{
    std::size_t const n = params_.n, k = params_.k, r = n - k;
    if (parity_rows.size() != k)
        throw ConfigError("parity block needs k = " + std::to_string(k) + " rows, got " +
                          std::to_string(parity_rows.size()));
    for (auto const& row : parity_rows)
        if (row.size() != r)
            throw ConfigError("parity row has " + std::to_string(row.size()) +
                              " bits, expected n - k = " + std::to_string(r));

    generator_.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        BitVec unit(k);
        unit.set(i, true);
        generator_.push_back(concat(Message{unit}, Padding{parity_rows[i]}));
    }

    parity_check_.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
    {
        BitVec row(n);
        for (std::size_t i = 0; i < k; ++i)
            if (parity_rows[i].get(j)) row.set(i, true);
        row.set(k + j, true);
        parity_check_.push_back(row);
    }
}

RlcCode RlcCode::generate(CodeParams params, std::uint64_t seed)
{
    params = CodeParams::make(params.n, params.k);
    if (params.k >= params.n)
        throw ConfigError("a random linear code needs k < n");
    std::size_t const r = params.n - params.k;
    std::mt19937_64 engine(seed);
    std::vector<BitVec> rows;
    rows.reserve(params.k);
    for (std::size_t i = 0; i < params.k; ++i)
    {
        BitVec row(r);
        for (std::size_t base = 0; base < r; base += 64)
        {
            std::uint64_t draw = engine();
            for (std::size_t b = 0; b < 64 && base + b < r; ++b)
                if ((draw >> (63 - b)) & 1) row.set(base + b, true);
        }
        rows.push_back(row);
    }
    return RlcCode(params, std::move(rows), seed);
}

RlcCode RlcCode::from_parity(CodeParams params, std::vector<BitVec> parity_rows,
                             std::optional<std::uint64_t> seed)
{
    return RlcCode(CodeParams::make(params.n, params.k), std::move(parity_rows), seed);
}

BitVec RlcCode::encode(Message const& m) const
{
    require_message(m, params_);
    BitVec c(params_.n);
    for (std::size_t i = 0; i < params_.k; ++i)
        if (m.bits.get(i)) c ^= generator_[i];
    return c;
}

BitVec RlcCode::syndrome(BitVec const& word) const
{
    if (word.size() != params_.n)
        throw UsageError("word length " + std::to_string(word.size()) + " does not match n = " +
                         std::to_string(params_.n));
    BitVec s(parity_check_.size());
    for (std::size_t j = 0; j < parity_check_.size(); ++j)
    {
        auto const& h = parity_check_[j];
        int ones = std::popcount(h.word(0) & word.word(0)) + std::popcount(h.word(1) & word.word(1));
        if (ones & 1) s.set(j, true);
    }
    return s;
}

Verdict RlcCode::check(BitVec const& word) const
{
    if (word.size() != params_.n) return std::nullopt;
    for (auto const& h : parity_check_)
    {
        int ones = std::popcount(h.word(0) & word.word(0)) + std::popcount(h.word(1) & word.word(1));
        if (ones & 1) return std::nullopt;
    }
    return Message{slice(word, 0, params_.k)};
}

std::string RlcCode::to_text() const
{
    std::ostringstream out;
    out << "RLC " << params_.n << ' ' << params_.k << ' ';
    if (seed_)
        out << *seed_;
    else
        out << '-';
    out << '\n';
    for (auto const& row : generator_)
        out << row.to_hex() << '\n';
    return out.str();
}

RlcCode RlcCode::from_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line))
    {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        lines.push_back(line);
    }
    if (lines.empty()) throw ConfigError("RLC text: missing header");

    std::istringstream header(lines.front());
    std::string tag, seed_text;
    std::size_t n = 0, k = 0;
    if (!(header >> tag >> n >> k >> seed_text) || tag != "RLC")
        throw ConfigError("RLC text: malformed header '" + lines.front() + "'");
    auto params = CodeParams::make(n, k);
    std::optional<std::uint64_t> seed;
    if (seed_text != "-")
    {
        try
        {
            seed = std::stoull(seed_text);
        }
        catch (std::exception const&)
        {
            throw ConfigError("RLC text: bad seed '" + seed_text + "'");
        }
    }
    if (lines.size() != k + 1)
        throw ConfigError("RLC text: expected " + std::to_string(k) + " generator rows, got " +
                          std::to_string(lines.size() - 1));

    std::vector<BitVec> parity;
    parity.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        BitVec row;
        try
        {
            row = BitVec::from_hex(lines[i + 1], n);
        }
        catch (UsageError const& e)
        {
            throw ConfigError("RLC text: row " + std::to_string(i) + ": " + e.what());
        }
        auto [head, tail] = split(row, k);
        BitVec unit(k);
        unit.set(i, true);
        if (head.bits != unit)
            throw ConfigError("RLC text: row " + std::to_string(i) + " is not systematic");
        parity.push_back(tail);
    }
    return RlcCode(params, std::move(parity), seed);
}

RlcCode rlc_generate(CodeParams const& params, std::uint64_t seed)
{
    return RlcCode::generate(params, seed);
}

BitVec rlc_encode(Message const& m, RlcCode const& code)
{
    return code.encode(m);
}

Verdict rlc_oracle(BitVec const& c, RlcCode const& code)
{
    return code.check(c);
}

}  // namespace aesec
