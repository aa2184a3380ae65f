#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace simlearn {

/// Bad or inconsistent run configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Everything a run needs, validated up front so failures happen before any
/// work starts.
struct ExperimentConfig {
    std::string mode = "synthetic";  // synthetic | real | adversarial
    std::vector<double> deltas = {0.1};
    double epsilon = 0.1;
    double rho = 12.0;

    // synthetic data
    double u_var = 2.0;
    int dim = 20;
    int mixture_components = 16;

    // adversarial data
    std::int64_t adversarial_support = 1000000;

    // real data
    std::string dataset;
    std::string schema;
    std::string group_column;
    std::vector<std::string> group_one_values;

    // run shape
    std::int64_t trials = 1000;
    int repeats = 1;
    std::uint64_t seed = 1;
    std::string out = "out";
    std::int64_t materialize_threshold = 10000000;
    bool parallel = false;

    // rare-mass estimation
    std::int64_t rare_outer = 200;
    std::int64_t rare_inner = 0;  // 0 = ceil(50 / delta)

    // gen-data
    std::int64_t rows_per_group = 2000;

    void validate() const;  // throws ConfigError
};

/// Reads a config object; unknown keys are rejected so typos fail loudly.
ExperimentConfig config_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const ExperimentConfig& config);

ExperimentConfig load_config(const std::string& path);

}  // namespace simlearn
