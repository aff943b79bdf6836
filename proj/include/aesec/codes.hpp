#pragma once

#include "aesec/aes.hpp"
#include "aesec/bitvec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aesec {

/// Block length n and message length k, 0 < k <= n <= 128.
struct CodeParams
{
    std::size_t n = 128;
    std::size_t k = 116;

    /// Validating constructor; throws ConfigError.
    static CodeParams make(std::size_t n, std::size_t k);

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
    std::size_t redundancy() const { return n - k; }

    friend bool operator==(CodeParams const&, CodeParams const&) = default;
};

/// Verdict of a membership test: the decoded message, or nullopt when the
/// word is not a codeword.
using Verdict = std::optional<Message>;

/// "Is this word a codeword, and if so which message?" The decoder's only
/// view of a code. Implementations are deterministic and side-effect free,
/// so a single oracle may be queried concurrently.
class MembershipOracle
{
public:
    virtual ~MembershipOracle() = default;
    virtual std::size_t length() const = 0;
    virtual Verdict check(BitVec const& word) const = 0;
};

/// A code: an encoder plus its membership oracle.
class Code : public MembershipOracle
{
public:
    virtual CodeParams params() const = 0;
    virtual BitVec encode(Message const& m) const = 0;
    virtual std::string name() const = 0;

    std::size_t length() const override { return params().n; }
};

/// Codebook {AES(m ; 0_{n-k})}. A word is a codeword iff its decryption
/// ends in n-k zero bits; the first k bits of the decryption are the message.
///
/// A uniformly random word is accepted with probability 2^-(n-k), which is
/// the undetected-error floor of the scheme.
class AesPadCode final : public Code
{
public:
    AesPadCode(CodeParams params, AesKey const& key);

    CodeParams params() const override { return params_; }
    BitVec encode(Message const& m) const override;
    Verdict check(BitVec const& word) const override;
    std::string name() const override { return "AES"; }

    AesKey const& key() const { return key_; }

private:
    CodeParams params_;
    AesKey key_;
    KeySchedule schedule_;
    std::uint64_t pad_mask_hi_ = 0;
    std::uint64_t pad_mask_lo_ = 0;
};

/// Systematic random linear code with G = [I_k | P] and H = [P^T | I_{n-k}].
class RlcCode final : public Code
{
public:
    /// P drawn bit by bit from std::mt19937_64(seed): row i of P takes
    /// ceil((n-k)/64) consecutive outputs, most significant bit first.
    static RlcCode generate(CodeParams params, std::uint64_t seed);
    /// Build from an explicit k x (n-k) parity block.
    static RlcCode from_parity(CodeParams params, std::vector<BitVec> parity_rows,
                               std::optional<std::uint64_t> seed = std::nullopt);

    CodeParams params() const override { return params_; }
    BitVec encode(Message const& m) const override;
    Verdict check(BitVec const& word) const override;
    std::string name() const override { return "RLC"; }

    /// H c^T as an (n-k)-bit vector.
    BitVec syndrome(BitVec const& word) const;

    std::vector<BitVec> const& generator() const { return generator_; }
    std::vector<BitVec> const& parity_check() const { return parity_check_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    /// Text form: a header line "RLC <n> <k> <seed|->" followed by the k
    /// generator rows in hex. Lines starting with '#' are ignored on read.
    std::string to_text() const;
    static RlcCode from_text(std::string_view text);

    friend bool operator==(RlcCode const& a, RlcCode const& b)
    {
        return a.params_ == b.params_ && a.generator_ == b.generator_;
    }

private:
    RlcCode(CodeParams params, std::vector<BitVec> parity_rows, std::optional<std::uint64_t> seed);

    CodeParams params_;
    std::optional<std::uint64_t> seed_;
    std::vector<BitVec> generator_;
    std::vector<BitVec> parity_check_;
};

// Free-function forms of the code operations.
BitVec aes_encode(Message const& m, CodeParams const& params, KeySchedule const& ks);
Verdict aes_oracle(BitVec const& c, CodeParams const& params, KeySchedule const& ks);
RlcCode rlc_generate(CodeParams const& params, std::uint64_t seed);
BitVec rlc_encode(Message const& m, RlcCode const& code);
Verdict rlc_oracle(BitVec const& c, RlcCode const& code);

}  // namespace aesec
