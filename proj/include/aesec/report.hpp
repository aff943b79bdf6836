#pragma once

#include "aesec/campaign.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace aesec {

/// Full campaign result as JSON. Wall time and worker count are left out so
/// the document is a pure function of the configuration.
nlohmann::json to_json(CampaignResult const& result);
CampaignResult campaign_from_json(nlohmann::json const& doc);

/// One CSV row per grid point: ebn0_db, blocks, block_errors, bit_errors,
/// abandoned, ber, bler, CI bounds, mean_queries, p99_queries.
std::string points_csv(CampaignResult const& result);

/// Long-format row of the plot table; one series per (code, decoder).
struct PlotRow
{
    std::string series;
    double ebn0_db = 0.0;
    double ber = 0.0;
    double ber_lo = 0.0;
    double ber_hi = 0.0;
    double bler = 0.0;
    double bler_lo = 0.0;
    double bler_hi = 0.0;

    friend bool operator==(PlotRow const&, PlotRow const&) = default;
};

std::string series_label(CampaignConfig const& config);

std::vector<PlotRow> plot_rows(std::vector<CampaignResult> const& results);
std::string plot_csv(std::vector<PlotRow> const& rows);
/// Parses plot_csv output; '#' lines are metadata and skipped.
std::vector<PlotRow> parse_plot_csv(std::string_view text);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace aesec
