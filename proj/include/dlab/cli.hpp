#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlab {

/// A validated experiment run: one experiment per invocation, sweeps are
/// expressed inside params. Defaults are filled in at parse time so the
/// config echo records exactly what ran.
struct ExperimentConfig {
    std::string experiment;
    nlohmann::json params = nlohmann::json::object();
    std::uint64_t seed = 0;
    std::string output_path;
};

struct RunReport {
    ExperimentConfig config_echo;
    std::uint64_t rows_written = 0;
    double wall_time_seconds = 0.0;
    std::string artifact_version;
};

struct ExperimentInfo {
    std::string name;
    std::vector<std::string> required_params;
    std::vector<std::string> optional_params;
    std::string description;
};

/// Parses and validates a JSON config. Throws nlohmann::json::parse_error
/// on malformed input and validation_error on schema violations (unknown
/// experiment or key, missing required key, non-positive count).
ExperimentConfig parse_config(const std::string& text);

/// Canonical JSON serialization; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig& cfg);

/// Runs the experiment and writes its CSV atomically (temp file + rename).
/// Identical configs, including the seed, produce byte-identical output for
/// any DLAB_THREADS setting.
RunReport run_experiment(const ExperimentConfig& cfg);

/// Complete experiment registry, one entry per valid experiment name.
std::vector<ExperimentInfo> list_experiments();

}  // namespace dlab
