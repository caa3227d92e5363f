#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace egt {

/// One experiment invocation, as configured on the command line or in a
/// batch file.  Round-trips losslessly through JSON.
struct ExperimentConfig {
    std::string operation;
    std::vector<std::string> inputs;            // file paths, in order
    std::map<std::string, std::string> params;  // rationals as "num/den"
    std::uint64_t seed = 0;
    long trials = 1;
    std::uint64_t budget = 0;  // 0 = module default
    std::string out_path;      // empty = stdout

    bool operator==(const ExperimentConfig&) const = default;
};

nlohmann::json config_to_json(const ExperimentConfig& c);
ExperimentConfig config_from_json(const nlohmann::json& j);

/// One line of the structured output document (JSON lines, versioned).
struct ResultRecord {
    int schema = 1;
    std::string operation;
    std::string inputs_digest;
    std::map<std::string, std::string> params;
    std::string outcome;  // ok | hypothesis-failure | embedding-failure |
                          // size-error | budget-error | usage-error
    nlohmann::json payload;
    double wall_time_s = 0.0;
    std::uint64_t seed = 0;
};

std::string record_to_json_line(const ResultRecord& r);

/// FNV-1a over raw bytes, rendered as 16 hex digits.
std::string digest_bytes(const std::string& bytes);
std::string digest_files(const std::vector<std::string>& paths);

}  // namespace egt
