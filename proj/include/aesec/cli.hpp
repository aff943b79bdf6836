#pragma once

#include "aesec/campaign.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aesec {

enum class Subcommand
{
    run,
    selftest,
    plot_data,
};

struct CliInvocation
{
    Subcommand subcommand = Subcommand::run;
    CampaignConfig config;
    /// "-" is stdout.
    std::string out_path = "-";
    std::string csv_path;
    std::string save_code_path;
    std::vector<std::string> inputs;
};

/// Thrown for --help; what() holds the help text.
class HelpRequested : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Grid syntax: "start:step:stop" (stop included when reached to within
/// rounding) or a comma-separated list. Throws ConfigError.
std::vector<double> parse_grid(std::string_view text);

/// Parses argv (argv[0] is the program name) and applies defaults. Throws
/// UsageError or ConfigError whose message names the offending flag, or
/// HelpRequested.
CliInvocation parse_and_validate(int argc, char const* const* argv);

/// Entry point shared by the executable and the tests. Returns the process
/// exit status: 0 iff the requested operation fully succeeded.
int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aesec
