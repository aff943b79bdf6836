#include "aesec/report.hpp"

#include <charconv>
#include <sstream>

namespace aesec {

namespace {

using nlohmann::json;

json interval_json(Interval const& iv)
{
    return json::array({iv.lo, iv.hi});
}

Interval interval_from(json const& j)
{
    return Interval{j.at(0).get<double>(), j.at(1).get<double>()};
}

CodeKind code_kind_from(std::string const& s)
{
    if (s == "AES") return CodeKind::aes;
    if (s == "RLC") return CodeKind::rlc;
    throw ConfigError("unknown code kind '" + s + "'");
}

DecoderKind decoder_kind_from(std::string const& s)
{
    if (s == "GRAND") return DecoderKind::grand;
    if (s == "ORBGRAND") return DecoderKind::orbgrand;
    throw ConfigError("unknown decoder kind '" + s + "'");
}

double parse_double(std::string_view field)
{
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw UsageError("malformed number '" + std::string(field) + "'");
    return v;
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true)
    {
        std::size_t comma = line.find(',', start);
        out.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

constexpr char kPlotHeader[] = "series,ebn0_db,ber,ber_lo,ber_hi,bler,bler_lo,bler_hi";

}  // namespace

std::string format_double(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

json to_json(CampaignResult const& result)
{
    auto const& c = result.config;
    json config = {
        {"code", to_string(c.code_kind)},
        {"decoder", to_string(c.decoder_kind)},
        {"n", c.params.n},
        {"k", c.params.k},
        {"rate", c.params.rate()},
        {"ebn0_grid_db", c.ebn0_grid_db},
        {"max_queries", c.budget.max_queries},
        {"min_block_errors", c.min_block_errors},
        {"max_blocks", c.max_blocks},
        {"master_seed", c.master_seed},
    };
    if (c.code_kind == CodeKind::aes)
        config["aes_key"] = c.aes_key.to_hex();
    else
        config["rlc_seed"] = c.rlc_seed;

    json points = json::array();
    for (auto const& p : result.points)
    {
        json jp = {
            {"ebn0_db", p.ebn0_db},
            {"sigma", p.sigma},
            {"noise_entropy_bits", p.noise_entropy},
            {"blocks", p.blocks},
            {"block_errors", p.block_errors},
            {"bit_errors", p.bit_errors},
            {"abandoned", p.abandoned},
            {"bler", p.bler},
            {"ber", p.ber},
            {"bler_ci95", interval_json(p.bler_ci95)},
            {"ber_ci95", interval_json(p.ber_ci95)},
            {"mean_queries", p.mean_queries},
            {"p99_queries", p.p99_queries},
            {"hit_max_blocks", p.hit_max_blocks},
        };
        if (p.bler_upper_rule_of_three)
            jp["bler_upper_rule_of_three"] = *p.bler_upper_rule_of_three;
        points.push_back(std::move(jp));
    }

    return json{
        {"version", result.version},
        {"config", std::move(config)},
        {"metadata",
         {
             {"stopping_rule",
              "inverse (negative-binomial) sampling: stop at min_block_errors block errors or "
              "max_blocks blocks; trials counted in index order"},
             {"abandoned_bit_errors", "ceil(k/2) per abandoned block"},
             {"bpsk", "bit 0 -> +1, bit 1 -> -1"},
             {"noise", "sigma = sqrt(1 / (2 R 10^(Eb/N0 / 10)))"},
             {"confidence_intervals", "Wilson score, 95%"},
         }},
        {"points", std::move(points)},
    };
}

CampaignResult campaign_from_json(json const& doc)
{
    CampaignResult r;
    r.version = doc.at("version").get<std::string>();
    auto const& c = doc.at("config");
    r.config.code_kind = code_kind_from(c.at("code").get<std::string>());
    r.config.decoder_kind = decoder_kind_from(c.at("decoder").get<std::string>());
    r.config.params = CodeParams::make(c.at("n").get<std::size_t>(), c.at("k").get<std::size_t>());
    r.config.ebn0_grid_db = c.at("ebn0_grid_db").get<std::vector<double>>();
    r.config.budget.max_queries = c.at("max_queries").get<std::uint64_t>();
    r.config.min_block_errors = c.at("min_block_errors").get<std::uint64_t>();
    r.config.max_blocks = c.at("max_blocks").get<std::uint64_t>();
    r.config.master_seed = c.at("master_seed").get<std::uint64_t>();
    if (c.contains("aes_key")) r.config.aes_key = AesKey::from_hex(c["aes_key"].get<std::string>());
    if (c.contains("rlc_seed")) r.config.rlc_seed = c["rlc_seed"].get<std::uint64_t>();

    for (auto const& jp : doc.at("points"))
    {
        PointResult p;
        p.ebn0_db = jp.at("ebn0_db").get<double>();
        p.sigma = jp.at("sigma").get<double>();
        p.noise_entropy = jp.at("noise_entropy_bits").get<double>();
        p.blocks = jp.at("blocks").get<std::uint64_t>();
        p.block_errors = jp.at("block_errors").get<std::uint64_t>();
        p.bit_errors = jp.at("bit_errors").get<std::uint64_t>();
        p.abandoned = jp.at("abandoned").get<std::uint64_t>();
        p.bler = jp.at("bler").get<double>();
        p.ber = jp.at("ber").get<double>();
        p.bler_ci95 = interval_from(jp.at("bler_ci95"));
        p.ber_ci95 = interval_from(jp.at("ber_ci95"));
        p.mean_queries = jp.at("mean_queries").get<double>();
        p.p99_queries = jp.at("p99_queries").get<double>();
        p.hit_max_blocks = jp.at("hit_max_blocks").get<bool>();
        if (jp.contains("bler_upper_rule_of_three"))
            p.bler_upper_rule_of_three = jp["bler_upper_rule_of_three"].get<double>();
        r.points.push_back(p);
    }
    return r;
}

std::string points_csv(CampaignResult const& result)
{
    std::ostringstream out;
    out << "ebn0_db,blocks,block_errors,bit_errors,abandoned,ber,bler,ber_lo,ber_hi,bler_lo,"
           "bler_hi,mean_queries,p99_queries\n";
    for (auto const& p : result.points)
    {
        out << format_double(p.ebn0_db) << ',' << p.blocks << ',' << p.block_errors << ','
            << p.bit_errors << ',' << p.abandoned << ',' << format_double(p.ber) << ','
            << format_double(p.bler) << ',' << format_double(p.ber_ci95.lo) << ','
            << format_double(p.ber_ci95.hi) << ',' << format_double(p.bler_ci95.lo) << ','
            << format_double(p.bler_ci95.hi) << ',' << format_double(p.mean_queries) << ','
            << format_double(p.p99_queries) << '\n';
    }
    return out.str();
}

std::string series_label(CampaignConfig const& config)
{
    return std::string(to_string(config.code_kind)) + "/" + to_string(config.decoder_kind);
}

std::vector<PlotRow> plot_rows(std::vector<CampaignResult> const& results)
{
    std::vector<PlotRow> rows;
    for (auto const& r : results)
    {
        std::string const label = series_label(r.config);
        for (auto const& p : r.points)
            rows.push_back(PlotRow{label, p.ebn0_db, p.ber, p.ber_ci95.lo, p.ber_ci95.hi, p.bler,
                                   p.bler_ci95.lo, p.bler_ci95.hi});
    }
    return rows;
}

std::string plot_csv(std::vector<PlotRow> const& rows)
{
    std::ostringstream out;
    out << "# aesec " << artifact_version() << " plot data\n" << kPlotHeader << '\n';
    for (auto const& r : rows)
    {
        out << r.series << ',' << format_double(r.ebn0_db) << ',' << format_double(r.ber) << ','
            << format_double(r.ber_lo) << ',' << format_double(r.ber_hi) << ','
            << format_double(r.bler) << ',' << format_double(r.bler_lo) << ','
            << format_double(r.bler_hi) << '\n';
    }
    return out.str();
}

std::vector<PlotRow> parse_plot_csv(std::string_view text)
{
    std::vector<PlotRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line))
    {
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen)
        {
            if (line != kPlotHeader) throw UsageError("plot CSV: unexpected header '" + line + "'");
            header_seen = true;
            continue;
        }
        auto f = split_fields(line);
        if (f.size() != 8) throw UsageError("plot CSV: expected 8 fields in '" + line + "'");
        rows.push_back(PlotRow{std::string(f[0]), parse_double(f[1]), parse_double(f[2]),
                               parse_double(f[3]), parse_double(f[4]), parse_double(f[5]),
                               parse_double(f[6]), parse_double(f[7])});
    }
    if (!header_seen) throw UsageError("plot CSV: missing header");
    return rows;
}

}  // namespace aesec
