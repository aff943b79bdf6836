#include "aesec/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#ifndef AESEC_VERSION
#define AESEC_VERSION "0.0.0"
#endif

namespace aesec {

namespace {

constexpr std::uint64_t kFirstBatch = 256;
constexpr std::uint64_t kMaxBatch = 1 << 16;
constexpr std::uint64_t kChunk = 32;

unsigned resolve_workers(unsigned requested)
{
    if (requested != 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

Message draw_message(std::size_t k, SplitMix64& rng)
{
    std::uint64_t hi = rng();
    std::uint64_t lo = k > 64 ? rng() : 0;
    return Message{BitVec::from_words(hi, lo, k)};
}

// Runs body(t) for t in [first, last) on `workers` threads.
template <typename Body>
void parallel_trials(std::uint64_t first, std::uint64_t last, unsigned workers, Body const& body)
{
    if (workers <= 1 || last - first <= kChunk)
    {
        for (std::uint64_t t = first; t < last; ++t)
            body(t);
        return;
    }
    std::atomic<std::uint64_t> cursor{first};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back([&] {
                try
                {
                    for (;;)
                    {
                        std::uint64_t begin = cursor.fetch_add(kChunk);
                        if (begin >= last) break;
                        std::uint64_t end = std::min(last, begin + kChunk);
                        for (std::uint64_t t = begin; t < end; ++t)
                            body(t);
                    }
                }
                catch (...)
                {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    cursor.store(last);
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

char const* to_string(CodeKind kind)
{
    switch (kind)
    {
    case CodeKind::aes: return "AES";
    case CodeKind::rlc: return "RLC";
    }
    return "?";
}

char const* artifact_version()
{
    return AESEC_VERSION;
}

void CampaignConfig::validate() const
{
    CodeParams::make(params.n, params.k);
    if (code_kind == CodeKind::aes && params.n != 128)
        throw ConfigError("n: the AES code requires n = 128, got " + std::to_string(params.n));
    if (code_kind == CodeKind::rlc && params.k >= params.n)
        throw ConfigError("k: a random linear code needs k < n");
    if (ebn0_grid_db.empty()) throw ConfigError("ebn0: grid is empty");
    for (std::size_t i = 0; i < ebn0_grid_db.size(); ++i)
    {
        if (!std::isfinite(ebn0_grid_db[i])) throw ConfigError("ebn0: grid value is not finite");
        if (i > 0 && !(ebn0_grid_db[i] > ebn0_grid_db[i - 1]))
            throw ConfigError("ebn0: grid must be strictly increasing");
    }
    if (budget.max_queries < 1) throw ConfigError("max-queries: must be at least 1");
    if (min_block_errors < 1) throw ConfigError("min-block-errors: must be at least 1");
    if (max_blocks < min_block_errors)
        throw ConfigError("max-blocks: must be at least min-block-errors");
}

std::unique_ptr<Code> make_code(CampaignConfig const& config)
{
    switch (config.code_kind)
    {
    case CodeKind::aes: return std::make_unique<AesPadCode>(config.params, config.aes_key);
    case CodeKind::rlc:
        return std::make_unique<RlcCode>(RlcCode::generate(config.params, config.rlc_seed));
    }
    throw ConfigError("unknown code kind");
}

BlockStreams BlockStreams::derive(std::uint64_t master_seed, std::uint64_t point_index,
                                  std::uint64_t trial_index)
{
    return BlockStreams{
        make_stream(master_seed, point_index, trial_index, StreamPurpose::message),
        make_stream(master_seed, point_index, trial_index, StreamPurpose::noise),
    };
}

std::uint32_t abandoned_bit_errors(std::size_t k)
{
    return static_cast<std::uint32_t>((k + 1) / 2);
}

BlockRecord run_block(Code const& code, DecoderKind decoder, ChannelPoint const& point,
                      PatternBudget budget, BlockStreams& streams, BlockTrace* trace)
{
    std::size_t const k = code.params().k;
    Message const sent = draw_message(k, streams.message);
    BitVec const codeword = code.encode(sent);
    SoftWord received = add_awgn(modulate(codeword), point.sigma, streams.noise);

    DecodeOutcome outcome = decoder == DecoderKind::grand
                                ? grand_decode(hard_decision(received), code, budget)
                                : orbgrand_decode(received, code, budget);

    BlockRecord record;
    record.queries = outcome.queries;
    if (outcome.abandoned())
    {
        record.error = true;
        record.abandoned = true;
        record.bit_errors = abandoned_bit_errors(k);
    }
    else if (*outcome.message != sent)
    {
        record.error = true;
        record.bit_errors =
            static_cast<std::uint32_t>(hamming_distance(outcome.message->bits, sent.bits));
    }
    if (trace) *trace = BlockTrace{sent, codeword, std::move(received), std::move(outcome)};
    return record;
}

PointResult aggregate(ChannelPoint const& point, std::size_t k, std::span<const BlockRecord> records,
                      bool hit_max_blocks)
{
    PointResult r;
    r.ebn0_db = point.ebn0_db;
    r.sigma = point.sigma;
    r.noise_entropy = point.noise_entropy;
    r.blocks = records.size();
    r.hit_max_blocks = hit_max_blocks;

    std::vector<std::uint64_t> queries;
    queries.reserve(records.size());
    double query_sum = 0.0;
    for (auto const& rec : records)
    {
        r.block_errors += rec.error ? 1 : 0;
        r.abandoned += rec.abandoned ? 1 : 0;
        r.bit_errors += rec.bit_errors;
        query_sum += static_cast<double>(rec.queries);
        queries.push_back(rec.queries);
    }

    std::uint64_t const bits = r.blocks * k;
    r.bler = r.blocks ? static_cast<double>(r.block_errors) / static_cast<double>(r.blocks) : 0.0;
    r.ber = bits ? static_cast<double>(r.bit_errors) / static_cast<double>(bits) : 0.0;
    r.bler_ci95 = wilson_interval(r.block_errors, r.blocks);
    r.ber_ci95 = wilson_interval(r.bit_errors, bits);
    r.mean_queries = r.blocks ? query_sum / static_cast<double>(r.blocks) : 0.0;
    r.p99_queries = percentile(queries, 0.99);
    if (r.block_errors == 0) r.bler_upper_rule_of_three = rule_of_three(r.blocks);
    return r;
}

PointResult run_point(CampaignConfig const& config, Code const& code, std::size_t point_index,
                      std::vector<BlockRecord>* log)
{
    if (point_index >= config.ebn0_grid_db.size())
        throw UsageError("point index out of range");
    ChannelPoint const point =
        ChannelPoint::make(config.ebn0_grid_db[point_index], code.params().rate());
    unsigned const workers = resolve_workers(config.workers);

    std::vector<BlockRecord> records;
    std::uint64_t errors = 0;
    std::uint64_t done = 0;
    std::uint64_t cutoff = 0;
    bool hit_max = false;
    std::uint64_t batch = kFirstBatch;

    while (true)
    {
        std::uint64_t const count = std::min(batch, config.max_blocks - done);
        records.resize(done + count);
        parallel_trials(done, done + count, workers, [&](std::uint64_t t) {
            auto streams = BlockStreams::derive(config.master_seed, point_index, t);
            records[t] = run_block(code, config.decoder_kind, point, config.budget, streams);
        });

        // The cutoff is decided in trial order, never by completion order.
        bool stop = false;
        for (std::uint64_t t = done; t < done + count; ++t)
        {
            errors += records[t].error ? 1 : 0;
            if (errors >= config.min_block_errors)
            {
                cutoff = t + 1;
                stop = true;
                break;
            }
        }
        done += count;
        if (stop) break;
        if (done >= config.max_blocks)
        {
            cutoff = config.max_blocks;
            hit_max = true;
            break;
        }
        batch = std::min(batch * 2, kMaxBatch);
    }

    records.resize(cutoff);
    PointResult result = aggregate(point, code.params().k, records, hit_max);
    if (log) *log = std::move(records);
    return result;
}

CampaignResult run_campaign(CampaignConfig const& config)
{
    config.validate();
    auto const start = std::chrono::steady_clock::now();
    auto const code = make_code(config);

    CampaignResult result;
    result.config = config;
    result.version = artifact_version();
    result.points.reserve(config.ebn0_grid_db.size());
    for (std::size_t i = 0; i < config.ebn0_grid_db.size(); ++i)
        result.points.push_back(run_point(config, *code, i));
    result.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace aesec
