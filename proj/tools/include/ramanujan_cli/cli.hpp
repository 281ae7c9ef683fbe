#pragma once

// Command-line front end: argument parsing, report serialization and the run loop,
// kept in a library so tests can drive it without spawning processes.

#include "ramanujan/asymptotics.hpp"
#include "ramanujan/identities.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ramanujan::cli {

enum class Command { check, grid, asym, list };
enum class Format { json, csv };

struct RunConfig {
    Command command = Command::list;
    std::string identity;
    std::vector<GridAxis> params;  // one value per axis for check
    std::optional<double> tolerance;
    PrecisionConfig precision;
    std::string out_path;  // empty: standard output
    Format format = Format::json;
    int jobs = 1;
    bool timing = false;

    // Throws SpecError on empty axes, jobs < 1, or a command missing its id.
    void validate() const;
};

// Exit codes
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_failed = 2;

// Decimal literal, p/q, the tokens pi, 2pi, 4pi2 (each optionally signed), or a
// complex value such as 1+0.5i, -2i, pi+i.
cplx parse_value(const std::string& token);

// Comma-separated list of parse_value tokens.
std::vector<cplx> parse_list(const std::string& text);

// Flat key=value lines; blank lines and lines starting with '#' are skipped.
std::vector<std::pair<std::string, std::string>> parse_key_values(std::istream& in);

// Stable hash of everything that determines a report's content.
std::string run_id(const RunConfig& cfg);

nlohmann::json result_to_json(const IdentityCheckResult& r, const std::string& run_id, double wall_time_ms);
nlohmann::json report_to_json(const AsymptoticReport& r, const std::string& identity, const std::string& run_id,
                              double window, bool within);
nlohmann::json listing_to_json();

// Header and rows for a batch of results of one identity; complex parameters and both
// sides are split into _re/_im columns, numbers are printed with 17 significant digits.
std::string results_to_csv(const std::vector<IdentityCheckResult>& rows);
std::string report_to_csv(const AsymptoticReport& r);

// Parses argv and runs the command, writing the report to cfg.out_path or `out` and
// diagnostics to `err`. Returns one of the exit codes above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Runs an already parsed configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace ramanujan::cli
