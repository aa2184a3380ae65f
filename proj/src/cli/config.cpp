#include "simlearn/cli/config.hpp"

#include <set>

#include "simlearn/io/json_io.hpp"

namespace simlearn {

void ExperimentConfig::validate() const {
    if (mode != "synthetic" && mode != "real" && mode != "adversarial")
        throw ConfigError("config: mode must be synthetic, real or adversarial");
    if (deltas.empty()) throw ConfigError("config: delta grid is empty");
    for (double d : deltas)
        if (!(d > 0.0) || !(d < 1.0))
            throw ConfigError("config: every delta must lie in (0, 1)");
    if (!(epsilon > 0.0)) throw ConfigError("config: epsilon must be positive");
    if (!(rho > 0.0)) throw ConfigError("config: rho must be positive");
    if (!(u_var > 0.0)) throw ConfigError("config: u_var must be positive");
    if (dim < 1) throw ConfigError("config: dim must be positive");
    if (mixture_components < 2)
        throw ConfigError("config: at least two mixture components required");
    if (adversarial_support < 2)
        throw ConfigError("config: adversarial support needs at least two points");
    if (trials < 1) throw ConfigError("config: trials must be positive");
    if (repeats < 1) throw ConfigError("config: repeats must be positive");
    if (out.empty()) throw ConfigError("config: output directory is empty");
    if (materialize_threshold < 1)
        throw ConfigError("config: materialize threshold must be positive");
    if (rare_outer < 1) throw ConfigError("config: rare_outer must be positive");
    if (rare_inner < 0) throw ConfigError("config: rare_inner must be non-negative");
    if (rows_per_group < 2)
        throw ConfigError("config: rows_per_group must be at least two");
    if (mode == "real") {
        if (dataset.empty()) throw ConfigError("config: real mode needs a dataset path");
        if (schema.empty()) throw ConfigError("config: real mode needs a schema path");
        if (group_column.empty())
            throw ConfigError("config: real mode needs a group column");
        if (group_one_values.empty())
            throw ConfigError("config: real mode needs the labels that form group one");
    }
}

ExperimentConfig config_from_json(const nlohmann::ordered_json& j) {
    static const std::set<std::string> known = {
        "mode",          "deltas",
        "epsilon",       "rho",
        "u_var",         "dim",
        "mixture_components", "adversarial_support",
        "dataset",       "schema",
        "group_column",  "group_one_values",
        "trials",        "repeats",
        "seed",          "out",
        "materialize_threshold", "parallel",
        "rare_outer",    "rare_inner",
        "rows_per_group"};
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!known.count(key)) throw ConfigError("config: unknown key '" + key + "'");
    }

    ExperimentConfig c;
    try {
        if (j.contains("mode")) c.mode = j.at("mode").get<std::string>();
        if (j.contains("deltas")) c.deltas = j.at("deltas").get<std::vector<double>>();
        if (j.contains("epsilon")) c.epsilon = j.at("epsilon").get<double>();
        if (j.contains("rho")) c.rho = j.at("rho").get<double>();
        if (j.contains("u_var")) c.u_var = j.at("u_var").get<double>();
        if (j.contains("dim")) c.dim = j.at("dim").get<int>();
        if (j.contains("mixture_components"))
            c.mixture_components = j.at("mixture_components").get<int>();
        if (j.contains("adversarial_support"))
            c.adversarial_support = j.at("adversarial_support").get<std::int64_t>();
        if (j.contains("dataset")) c.dataset = j.at("dataset").get<std::string>();
        if (j.contains("schema")) c.schema = j.at("schema").get<std::string>();
        if (j.contains("group_column"))
            c.group_column = j.at("group_column").get<std::string>();
        if (j.contains("group_one_values"))
            c.group_one_values = j.at("group_one_values").get<std::vector<std::string>>();
        if (j.contains("trials")) c.trials = j.at("trials").get<std::int64_t>();
        if (j.contains("repeats")) c.repeats = j.at("repeats").get<int>();
        if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("out")) c.out = j.at("out").get<std::string>();
        if (j.contains("materialize_threshold"))
            c.materialize_threshold = j.at("materialize_threshold").get<std::int64_t>();
        if (j.contains("parallel")) c.parallel = j.at("parallel").get<bool>();
        if (j.contains("rare_outer")) c.rare_outer = j.at("rare_outer").get<std::int64_t>();
        if (j.contains("rare_inner")) c.rare_inner = j.at("rare_inner").get<std::int64_t>();
        if (j.contains("rows_per_group"))
            c.rows_per_group = j.at("rows_per_group").get<std::int64_t>();
    } catch (const nlohmann::ordered_json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

nlohmann::ordered_json to_json(const ExperimentConfig& config) {
    nlohmann::ordered_json j;
    j["mode"] = config.mode;
    j["deltas"] = config.deltas;
    j["epsilon"] = config.epsilon;
    j["rho"] = config.rho;
    j["u_var"] = config.u_var;
    j["dim"] = config.dim;
    j["mixture_components"] = config.mixture_components;
    j["adversarial_support"] = config.adversarial_support;
    j["dataset"] = config.dataset;
    j["schema"] = config.schema;
    j["group_column"] = config.group_column;
    j["group_one_values"] = config.group_one_values;
    j["trials"] = config.trials;
    j["repeats"] = config.repeats;
    j["seed"] = config.seed;
    j["out"] = config.out;
    j["materialize_threshold"] = config.materialize_threshold;
    j["parallel"] = config.parallel;
    j["rare_outer"] = config.rare_outer;
    j["rare_inner"] = config.rare_inner;
    j["rows_per_group"] = config.rows_per_group;
    return j;
}

ExperimentConfig load_config(const std::string& path) {
    nlohmann::ordered_json j;
    try {
        j = load_json(path);
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    }
    return config_from_json(j);
}

}  // namespace simlearn
