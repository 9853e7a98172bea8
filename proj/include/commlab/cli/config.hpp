#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace commlab::cli {

/// Bad flags, malformed input files or out-of-domain parameters (exit 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Everything that determines a report. Serialized verbatim into the report
/// header; execution knobs (thread count, kernel ISA) are deliberately absent
/// because they never change a report.
struct RunConfig {
    std::string command;
    std::uint64_t seed = 1;
    std::size_t n = 256;          // matrix dimension
    std::size_t trials = 10;
    std::optional<double> tol;    // command-specific default when unset
    std::string out = "-";        // "-" is stdout
    std::string format = "json";  // "json" or "csv" (dynamics only)
    std::string catalog;          // empty: bundled catalog
    int depth = 4;
    bool require_contraction = false;

    double alpha = 0.9;
    std::vector<double> alphas;   // empty: default grid
    std::vector<double> betas;
    int n_max = 6;
    std::string model = "exact";  // "exact" or "matrix"
    double t = 0.5;
    double epsilon = 0.1;
    std::string group;            // group file, or a builtin name such as "sym3"
    std::string word;             // mixed-word literal
    std::size_t n0 = 6;
    int k = 4;
    std::string report;           // replay input
};

/// Default alpha/beta grid for verify-identity.
std::vector<double> default_grid();

nlohmann::ordered_json to_json(const RunConfig& c);
/// Throws UsageError on missing or mistyped fields.
RunConfig config_from_json(const nlohmann::json& j);

} // namespace commlab::cli
