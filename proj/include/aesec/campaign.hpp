#pragma once

#include "aesec/aes.hpp"
#include "aesec/channel.hpp"
#include "aesec/codes.hpp"
#include "aesec/grand.hpp"
#include "aesec/rng.hpp"
#include "aesec/stats.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aesec {

enum class CodeKind
{
    aes,
    rlc,
};

char const* to_string(CodeKind kind);

/// Everything that determines a campaign's results. `workers` only changes
/// how fast they are produced.
struct CampaignConfig
{
    CodeKind code_kind = CodeKind::aes;
    DecoderKind decoder_kind = DecoderKind::grand;
    CodeParams params{128, 116};
    std::vector<double> ebn0_grid_db{6.0, 6.5, 7.0, 7.5, 8.0};
    PatternBudget budget{1'000'000};
    std::uint64_t min_block_errors = 100;
    std::uint64_t max_blocks = 1'000'000;
    std::uint64_t master_seed = 1;
    AesKey aes_key{};
    std::uint64_t rlc_seed = 42;
    /// 0 means std::thread::hardware_concurrency().
    unsigned workers = 0;

    /// Throws ConfigError naming the offending field.
    void validate() const;
};

std::unique_ptr<Code> make_code(CampaignConfig const& config);

/// The two independent substreams of one trial.
struct BlockStreams
{
    SplitMix64 message;
    SplitMix64 noise;

    static BlockStreams derive(std::uint64_t master_seed, std::uint64_t point_index,
                               std::uint64_t trial_index);
};

struct BlockRecord
{
    bool error = false;
    bool abandoned = false;
    std::uint32_t bit_errors = 0;
    std::uint64_t queries = 0;

    friend bool operator==(BlockRecord const&, BlockRecord const&) = default;
};

/// Bit errors charged to an abandoned block: ceil(k/2), the expected
/// distance of a random guess.
std::uint32_t abandoned_bit_errors(std::size_t k);

/// Intermediate values of one trial, for diagnostics.
struct BlockTrace
{
    Message sent;
    BitVec codeword;
    SoftWord received;
    DecodeOutcome outcome;
};

/// One trial: draw a uniform message, encode, modulate, add noise, decode,
/// compare.
BlockRecord run_block(Code const& code, DecoderKind decoder, ChannelPoint const& point,
                      PatternBudget budget, BlockStreams& streams, BlockTrace* trace = nullptr);

struct PointResult
{
    double ebn0_db = 0.0;
    double sigma = 0.0;
    double noise_entropy = 0.0;
    std::uint64_t blocks = 0;
    std::uint64_t block_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t abandoned = 0;
    double bler = 0.0;
    double ber = 0.0;
    Interval bler_ci95;
    Interval ber_ci95;
    double mean_queries = 0.0;
    double p99_queries = 0.0;
    /// Set when no block errors were seen: 3/blocks.
    std::optional<double> bler_upper_rule_of_three;
    /// True when max_blocks stopped the point before min_block_errors.
    bool hit_max_blocks = false;

    friend bool operator==(PointResult const&, PointResult const&) = default;
};

/// Reduce per-block records to a PointResult.
PointResult aggregate(ChannelPoint const& point, std::size_t k, std::span<const BlockRecord> records,
                      bool hit_max_blocks);

/// Runs trials 0, 1, 2, ... of grid point `point_index` until the running
/// block-error count reaches min_block_errors or max_blocks trials are done.
/// Trials execute in parallel batches but the result only includes trials
/// below the first index at which the stopping rule fired, so it does not
/// depend on the worker count. When `log` is non-null it receives exactly
/// those per-block records.
PointResult run_point(CampaignConfig const& config, Code const& code, std::size_t point_index,
                      std::vector<BlockRecord>* log = nullptr);

struct CampaignResult
{
    CampaignConfig config;
    std::vector<PointResult> points;
    double wall_time_seconds = 0.0;
    std::string version;
};

CampaignResult run_campaign(CampaignConfig const& config);

char const* artifact_version();

}  // namespace aesec
