#include "aesec/cli.hpp"

#include "aesec/report.hpp"
#include "aesec/selftest.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace aesec {

namespace {

double parse_number(std::string_view text, std::string_view what)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError("--ebn0: bad " + std::string(what) + " '" + std::string(text) + "'");
    return v;
}

bool write_output(std::string const& path, std::string const& text, std::ostream& out,
                  std::ostream& err)
{
    if (path == "-")
    {
        out << text;
        return static_cast<bool>(out);
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file)
    {
        err << "error: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

int do_run(CliInvocation const& inv, std::ostream& out, std::ostream& err)
{
    auto const& config = inv.config;
    if (!inv.save_code_path.empty())
    {
        if (config.code_kind != CodeKind::rlc)
        {
            err << "error: --save-code requires --code rlc\n";
            return 2;
        }
        if (!write_output(inv.save_code_path,
                          RlcCode::generate(config.params, config.rlc_seed).to_text(), out, err))
            return 1;
    }

    err << "running " << series_label(config) << " [" << config.params.n << ','
        << config.params.k << "] over " << config.ebn0_grid_db.size() << " Eb/N0 points\n";
    CampaignResult result = run_campaign(config);
    for (auto const& p : result.points)
        err << "  " << p.ebn0_db << " dB: blocks=" << p.blocks << " bler=" << p.bler
            << " ber=" << p.ber << " mean_queries=" << p.mean_queries << '\n';
    err << "wall time " << result.wall_time_seconds << " s\n";

    if (!write_output(inv.out_path, to_json(result).dump(2) + "\n", out, err)) return 1;
    if (!inv.csv_path.empty() && !write_output(inv.csv_path, points_csv(result), out, err))
        return 1;
    return 0;
}

int do_selftest(std::ostream& out)
{
    bool all = true;
    for (auto const& check : run_selftest())
    {
        out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name << ": " << check.detail
            << '\n';
        all = all && check.passed;
    }
    out << (all ? "selftest passed\n" : "selftest FAILED\n");
    return all ? 0 : 1;
}

int do_plot_data(CliInvocation const& inv, std::ostream& out, std::ostream& err)
{
    std::vector<CampaignResult> results;
    for (auto const& path : inv.inputs)
    {
        std::ifstream file(path, std::ios::binary);
        if (!file)
        {
            err << "error: cannot read '" << path << "'\n";
            return 1;
        }
        try
        {
            results.push_back(campaign_from_json(nlohmann::json::parse(file)));
        }
        catch (std::exception const& e)
        {
            err << "error: malformed result file '" << path << "': " << e.what() << '\n';
            return 1;
        }
    }
    return write_output(inv.out_path, plot_csv(plot_rows(results)), out, err) ? 0 : 1;
}

}  // namespace

std::vector<double> parse_grid(std::string_view text)
{
    if (text.empty()) throw ConfigError("--ebn0: grid is empty");
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos)
    {
        auto first = text.find(':');
        auto second = text.find(':', first + 1);
        if (second == std::string_view::npos || text.find(':', second + 1) != std::string_view::npos)
            throw ConfigError("--ebn0: range must be start:step:stop");
        double start = parse_number(text.substr(0, first), "start");
        double step = parse_number(text.substr(first + 1, second - first - 1), "step");
        double stop = parse_number(text.substr(second + 1), "stop");
        if (!(step > 0.0)) throw ConfigError("--ebn0: step must be positive");
        if (stop < start) throw ConfigError("--ebn0: stop is below start");
        auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (std::size_t i = 0; i < count; ++i)
            grid.push_back(start + static_cast<double>(i) * step);
    }
    else
    {
        std::size_t pos = 0;
        while (pos <= text.size())
        {
            auto comma = text.find(',', pos);
            auto field = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
            grid.push_back(parse_number(field, "value"));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
    }
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1])) throw ConfigError("--ebn0: grid must be strictly increasing");
    return grid;
}

CliInvocation parse_and_validate(int argc, char const* const* argv)
{
    CliInvocation inv;
    CampaignConfig& cfg = inv.config;

    CLI::App app{"AES as an error-correcting code: GRAND/ORBGRAND Monte Carlo campaigns",
                 "aesec"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "Run a BER/BLER campaign and emit JSON results");
    std::map<std::string, CodeKind> const codes{{"aes", CodeKind::aes}, {"rlc", CodeKind::rlc}};
    std::map<std::string, DecoderKind> const decoders{{"grand", DecoderKind::grand},
                                                      {"orbgrand", DecoderKind::orbgrand}};
    std::string grid_text = "6:0.5:8";
    std::string key_text = cfg.aes_key.to_hex();
    run->add_option("--code", cfg.code_kind, "Code family")
        ->transform(CLI::CheckedTransformer(codes, CLI::ignore_case))
        ->default_str("aes");
    run->add_option("--decoder", cfg.decoder_kind, "Decoder")
        ->transform(CLI::CheckedTransformer(decoders, CLI::ignore_case))
        ->default_str("grand");
    run->add_option("--n", cfg.params.n, "Block length")->capture_default_str();
    run->add_option("--k", cfg.params.k, "Message length")->capture_default_str();
    run->add_option("--ebn0", grid_text, "Eb/N0 grid in dB: start:step:stop or a,b,c")
        ->capture_default_str();
    run->add_option("--max-queries", cfg.budget.max_queries, "Oracle-call budget per block")
        ->capture_default_str();
    run->add_option("--min-block-errors", cfg.min_block_errors,
                    "Stop a point after this many block errors")
        ->capture_default_str();
    run->add_option("--max-blocks", cfg.max_blocks, "Stop a point after this many blocks")
        ->capture_default_str();
    run->add_option("--seed", cfg.master_seed, "Master seed for messages and noise")
        ->capture_default_str();
    run->add_option("--aes-key", key_text, "AES-128 key, 32 hex digits")->capture_default_str();
    run->add_option("--rlc-seed", cfg.rlc_seed, "Seed of the random linear code")
        ->capture_default_str();
    run->add_option("--workers", cfg.workers, "Worker threads (0 = all cores)")
        ->capture_default_str();
    run->add_option("--out", inv.out_path, "JSON result path ('-' for stdout)")
        ->capture_default_str();
    run->add_option("--csv", inv.csv_path, "Also write per-point CSV rows here");
    run->add_option("--save-code", inv.save_code_path,
                    "Write the RLC generator matrix (text format) here");

    auto* selftest = app.add_subcommand("selftest", "Run the built-in validation checks");

    auto* plot = app.add_subcommand("plot-data", "Merge result files into long-format plot CSV");
    plot->add_option("results", inv.inputs, "Campaign result JSON files")->required();
    plot->add_option("--out", inv.out_path, "CSV path ('-' for stdout)")->capture_default_str();

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const&)
    {
        throw HelpRequested(app.help());
    }
    catch (CLI::CallForAllHelp const&)
    {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    }
    catch (CLI::ParseError const& e)
    {
        throw UsageError(e.what());
    }

    if (selftest->parsed())
    {
        inv.subcommand = Subcommand::selftest;
        return inv;
    }
    if (plot->parsed())
    {
        inv.subcommand = Subcommand::plot_data;
        return inv;
    }

    inv.subcommand = Subcommand::run;
    if (cfg.params.n == 0 || cfg.params.n > BitVec::kMaxBits)
        throw ConfigError("--n: must be in 1..128, got " + std::to_string(cfg.params.n));
    if (cfg.params.k == 0 || cfg.params.k >= cfg.params.n)
        throw ConfigError("--k: must satisfy 0 < k < n, got k = " + std::to_string(cfg.params.k) +
                          " with n = " + std::to_string(cfg.params.n));
    if (cfg.code_kind == CodeKind::aes && cfg.params.n != 128)
        throw ConfigError("--n: the AES code requires n = 128");
    cfg.ebn0_grid_db = parse_grid(grid_text);
    try
    {
        cfg.aes_key = AesKey::from_hex(key_text);
    }
    catch (UsageError const& e)
    {
        throw ConfigError(std::string("--aes-key: ") + e.what());
    }
    try
    {
        cfg.validate();
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(std::string("--") + e.what());
    }
    return inv;
}

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CliInvocation inv;
    try
    {
        inv = parse_and_validate(argc, argv);
    }
    catch (HelpRequested const& help)
    {
        out << help.what();
        return 0;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try
    {
        switch (inv.subcommand)
        {
        case Subcommand::run: return do_run(inv, out, err);
        case Subcommand::selftest: return do_selftest(out);
        case Subcommand::plot_data: return do_plot_data(inv, out, err);
        }
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace aesec
