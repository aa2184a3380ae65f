#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "simlearn/cli/commands.hpp"
#include "simlearn/cli/config.hpp"

namespace {

using simlearn::ExperimentConfig;

// One slot per exposed field; a flag only overrides the config file (or the
// built-in default) when the user actually passed it.
struct CliValues {
    std::string config_path;
    std::string mode;
    std::vector<double> deltas;
    double epsilon = 0.0;
    double rho = 0.0;
    double uvar = 0.0;
    int dim = 0;
    int components = 0;
    std::int64_t support = 0;
    std::string dataset;
    std::string schema;
    std::string group_column;
    std::vector<std::string> group_one;
    std::int64_t trials = 0;
    int repeats = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::int64_t threshold = 0;
    bool parallel = false;
    std::int64_t rare_outer = 0;
    std::int64_t rare_inner = 0;
    std::int64_t rows_per_group = 0;
};

struct CliOptions {
    CLI::Option* config = nullptr;
    CLI::Option* mode = nullptr;
    CLI::Option* deltas = nullptr;
    CLI::Option* epsilon = nullptr;
    CLI::Option* rho = nullptr;
    CLI::Option* uvar = nullptr;
    CLI::Option* dim = nullptr;
    CLI::Option* components = nullptr;
    CLI::Option* support = nullptr;
    CLI::Option* dataset = nullptr;
    CLI::Option* schema = nullptr;
    CLI::Option* group_column = nullptr;
    CLI::Option* group_one = nullptr;
    CLI::Option* trials = nullptr;
    CLI::Option* repeats = nullptr;
    CLI::Option* seed = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* threshold = nullptr;
    CLI::Option* parallel = nullptr;
    CLI::Option* rare_outer = nullptr;
    CLI::Option* rare_inner = nullptr;
    CLI::Option* rows_per_group = nullptr;
};

CliOptions add_common_options(CLI::App& cmd, CliValues& v) {
    CliOptions o;
    o.config = cmd.add_option("--config", v.config_path,
                              "JSON config file; explicit flags override its fields");
    o.mode = cmd.add_option("--mode", v.mode, "synthetic | real | adversarial")
                 ->check(CLI::IsMember({"synthetic", "real", "adversarial"}));
    o.deltas = cmd.add_option("--delta", v.deltas,
                              "rarity thresholds to sweep (repeatable)");
    o.epsilon = cmd.add_option("--epsilon", v.epsilon, "accuracy scale");
    o.rho = cmd.add_option("--rho", v.rho, "cluster radius multiplier");
    o.uvar = cmd.add_option("--uvar", v.uvar,
                            "upper bound of the synthetic variance draw");
    o.dim = cmd.add_option("--dim", v.dim, "synthetic feature dimension");
    o.components =
        cmd.add_option("--components", v.components, "mixture components per group");
    o.support = cmd.add_option("--support", v.support,
                               "support size of the adversarial uniform group");
    o.dataset = cmd.add_option("--dataset", v.dataset, "CSV file (real mode)");
    o.schema = cmd.add_option("--schema", v.schema, "column schema JSON (real mode)");
    o.group_column = cmd.add_option("--group-column", v.group_column,
                                    "categorical column that splits the groups");
    o.group_one = cmd.add_option("--group-one", v.group_one,
                                 "labels forming the first group (repeatable)");
    o.trials = cmd.add_option("--trials", v.trials, "test pairs per grid point");
    o.repeats = cmd.add_option("--repeats", v.repeats, "independent repeats per delta");
    o.seed = cmd.add_option("--seed", v.seed, "master seed");
    o.out = cmd.add_option("--out", v.out, "output directory");
    o.threshold = cmd.add_option("--threshold", v.threshold,
                                 "max cross pairs materialized before lazy mode");
    o.parallel = cmd.add_flag("--parallel", v.parallel,
                              "evaluate grid points on separate threads");
    o.rare_outer = cmd.add_option("--rare-outer", v.rare_outer,
                                  "points tested by the rare-mass estimator");
    o.rare_inner = cmd.add_option("--rare-inner", v.rare_inner,
                                  "draws per ball-mass estimate (0 = default)");
    o.rows_per_group = cmd.add_option("--rows-per-group", v.rows_per_group,
                                      "rows per group written by gen-data");
    return o;
}

ExperimentConfig resolve(const CliValues& v, const CliOptions& o) {
    ExperimentConfig c =
        o.config->count() ? simlearn::load_config(v.config_path) : ExperimentConfig{};
    if (o.mode->count()) c.mode = v.mode;
    if (o.deltas->count()) c.deltas = v.deltas;
    if (o.epsilon->count()) c.epsilon = v.epsilon;
    if (o.rho->count()) c.rho = v.rho;
    if (o.uvar->count()) c.u_var = v.uvar;
    if (o.dim->count()) c.dim = v.dim;
    if (o.components->count()) c.mixture_components = v.components;
    if (o.support->count()) c.adversarial_support = v.support;
    if (o.dataset->count()) c.dataset = v.dataset;
    if (o.schema->count()) c.schema = v.schema;
    if (o.group_column->count()) c.group_column = v.group_column;
    if (o.group_one->count()) c.group_one_values = v.group_one;
    if (o.trials->count()) c.trials = v.trials;
    if (o.repeats->count()) c.repeats = v.repeats;
    if (o.seed->count()) c.seed = v.seed;
    if (o.out->count()) c.out = v.out;
    if (o.threshold->count()) c.materialize_threshold = v.threshold;
    if (o.parallel->count()) c.parallel = v.parallel;
    if (o.rare_outer->count()) c.rare_outer = v.rare_outer;
    if (o.rare_inner->count()) c.rare_inner = v.rare_inner;
    if (o.rows_per_group->count()) c.rows_per_group = v.rows_per_group;
    c.validate();
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cross-group similarity learners with query accounting"};
    app.require_subcommand(1);

    CliValues values;
    CLI::App* run = app.add_subcommand(
        "run", "Evaluate both learners over a delta grid and write artifacts");
    const CliOptions run_opts = add_common_options(*run, values);
    CLI::App* verify = app.add_subcommand(
        "verify", "Self-checks of the structural guarantees; PASS/FAIL per suite");
    const CliOptions verify_opts = add_common_options(*verify, values);
    CLI::App* rare = app.add_subcommand(
        "rare", "Estimate the thin-mass fraction of each group distribution");
    const CliOptions rare_opts = add_common_options(*rare, values);
    CLI::App* sigma_scan = app.add_subcommand(
        "sigma-scan", "Sample the true cross-group similarity to gauge its scale");
    const CliOptions sigma_opts = add_common_options(*sigma_scan, values);
    CLI::App* gen_data = app.add_subcommand(
        "gen-data", "Write a synthetic CSV dataset plus schema for real mode");
    const CliOptions gen_opts = add_common_options(*gen_data, values);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run->parsed()) return simlearn::cmd_run(resolve(values, run_opts), std::cout);
        if (verify->parsed())
            return simlearn::cmd_verify(resolve(values, verify_opts), std::cout);
        if (rare->parsed())
            return simlearn::cmd_rare(resolve(values, rare_opts), std::cout);
        if (sigma_scan->parsed())
            return simlearn::cmd_sigma_scan(resolve(values, sigma_opts), std::cout);
        if (gen_data->parsed())
            return simlearn::cmd_gen_data(resolve(values, gen_opts), std::cout);
    } catch (const simlearn::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
