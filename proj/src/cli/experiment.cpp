#include "simlearn/cli/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <future>
#include <limits>
#include <memory>

#include "simlearn/analysis/trials.hpp"
#include "simlearn/core/params.hpp"
#include "simlearn/datagen/adversarial.hpp"
#include "simlearn/datagen/mixture.hpp"
#include "simlearn/io/csv_out.hpp"
#include "simlearn/io/json_io.hpp"
#include "simlearn/learners/queryopt.hpp"
#include "simlearn/learners/simple.hpp"
#include "simlearn/oracle/simulated.hpp"

namespace simlearn {

namespace {

std::string grid_tag(double delta, int repeat) {
    return format_double(delta) + "/" + std::to_string(repeat);
}

std::vector<std::shared_ptr<const Metric>> metrics_from_spec(const OracleSpec& spec) {
    std::vector<std::shared_ptr<const Metric>> out;
    out.reserve(spec.alpha.size());
    for (const auto& alpha : spec.alpha)
        out.push_back(std::make_shared<WeightedEuclideanMetric>(alpha));
    return out;
}

/// Everything needed to train and test against one ground truth.
struct World {
    std::vector<std::shared_ptr<const Metric>> metrics;
    std::vector<GroupSample> samples;
    std::unique_ptr<Oracle> oracle_simple;    // one ledger per learner
    std::unique_ptr<Oracle> oracle_queryopt;
    PairSource test_pairs;
};

World make_synthetic_world(const ExperimentConfig& config, double delta, int repeat) {
    const std::string tag = grid_tag(delta, repeat);
    Rng wrng = Rng::stream(config.seed, "weights/" + tag);
    OracleSpec spec = draw_weights(config.dim, 2, wrng);

    Rng drng = Rng::stream(config.seed, "data/" + tag);
    auto dist0 = std::make_shared<MixtureDistribution>(
        0, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    auto dist1 = std::make_shared<MixtureDistribution>(
        1, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));

    World world;
    world.metrics = metrics_from_spec(spec);
    const std::int64_t n = sample_budget(delta);
    world.samples.push_back(collect_sample(*dist0, n, drng));
    world.samples.push_back(collect_sample(*dist1, n, drng));
    world.oracle_simple = std::make_unique<SimulatedOracle>(spec);
    world.oracle_queryopt = std::make_unique<SimulatedOracle>(std::move(spec));
    world.test_pairs = make_distribution_pair_source(
        dist0, dist1, Rng::stream(config.seed, "trials/" + tag));
    return world;
}

World make_adversarial_world(const ExperimentConfig& config, double delta, int repeat) {
    const std::string tag = grid_tag(delta, repeat);
    const std::uint64_t sigma_seed = Rng::stream(config.seed, "sigma/" + tag).next_u64();
    AdversarialInstance inst =
        make_single_vs_uniform_instance(config.adversarial_support, sigma_seed);

    Rng drng = Rng::stream(config.seed, "data/" + tag);
    World world;
    world.metrics = {inst.metric1, inst.metric2};
    const std::int64_t n = sample_budget(delta);
    world.samples.push_back(collect_sample(*inst.group1, n, drng));
    world.samples.push_back(collect_sample(*inst.group2, n, drng));
    world.oracle_simple = std::make_unique<TableOracle>(sigma_seed);
    world.oracle_queryopt = std::make_unique<TableOracle>(sigma_seed);
    world.test_pairs = make_distribution_pair_source(
        inst.group1, inst.group2, Rng::stream(config.seed, "trials/" + tag));
    return world;
}

World make_real_world(const ExperimentConfig& config, const PreparedReal& real,
                      double delta, int repeat) {
    const std::string tag = grid_tag(delta, repeat);
    const std::int64_t n = sample_budget(delta);
    const auto smallest = static_cast<std::int64_t>(
        std::min(real.group0_rows.size(), real.group1_rows.size()));
    if (n + config.trials > smallest)
        throw ConfigError("real mode: need " + std::to_string(n) + " training + " +
                          std::to_string(config.trials) +
                          " test rows per group, smallest group has " +
                          std::to_string(smallest));

    Rng wrng = Rng::stream(config.seed, "weights/" + tag);
    OracleSpec spec =
        draw_weights(static_cast<int>(real.standardized.cols), 2, wrng);

    Rng drng = Rng::stream(config.seed, "data/" + tag);
    auto s0 = std::make_shared<PermutationSampler>(0, real.standardized,
                                                   real.group0_rows, drng);
    auto s1 = std::make_shared<PermutationSampler>(1, real.standardized,
                                                   real.group1_rows, drng);

    World world;
    world.metrics = metrics_from_spec(spec);
    world.samples.push_back(s0->take(n));
    world.samples.push_back(s1->take(n));
    world.oracle_simple = std::make_unique<SimulatedOracle>(spec);
    world.oracle_queryopt = std::make_unique<SimulatedOracle>(std::move(spec));
    world.test_pairs = [s0, s1]() { return std::make_pair(s0->next(), s1->next()); };
    return world;
}

json outcome_digest(const DeltaOutcome& o) {
    json digest;
    digest["delta"] = o.delta;
    digest["repeat"] = o.repeat;
    digest["out_dir"] = o.out_dir;
    digest["n_per_group"] = o.n_per_group;
    digest["rep_counts"] = o.rep_counts;
    digest["queries"] = json{{"simple", o.simple_queries},
                             {"queryopt", o.queryopt_queries},
                             {"simple_billed", o.simple_billed},
                             {"queryopt_billed", o.queryopt_billed},
                             {"simple_lazy", o.simple_lazy},
                             {"queryopt_lazy", o.queryopt_lazy},
                             {"decrease_pct", o.decrease_pct}};
    digest["bound_violations"] = o.bound_violations;
    return digest;
}

void write_grid_point(const ExperimentConfig& config, const DeltaOutcome& outcome) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::path(config.out) / outcome.out_dir;
    fs::create_directories(dir);
    write_trials_csv((dir / "trials.csv").string(), outcome.records);
    write_histograms_csv((dir / "histograms.csv").string(), outcome.errors);
    json summary = outcome_digest(outcome);
    summary["errors"] = to_json(outcome.errors);
    summary["config"] = to_json(config);
    save_json(summary, (dir / "summary.json").string());
}

}  // namespace

PreparedReal prepare_real(const ExperimentConfig& config) {
    TableSchema schema;
    try {
        schema = table_schema_from_json(load_json(config.schema));
    } catch (const DataError& e) {
        throw ConfigError(std::string("real mode: ") + e.what());
    }
    RawTable table = load_csv(config.dataset, schema);
    if (table.rows < 4) throw ConfigError("real mode: dataset has too few usable rows");

    auto [ones, others] = split_groups(
        table, config.group_column, [&](const std::string& label) {
            return std::find(config.group_one_values.begin(),
                             config.group_one_values.end(),
                             label) != config.group_one_values.end();
        });

    const auto maps = fit_encoding(table);
    const NumericMatrix encoded = encode_categoricals(table, maps);
    auto [standardized, stats] = standardize(encoded);
    (void)stats;

    PreparedReal real;
    real.schema = std::move(schema);
    real.standardized = std::move(standardized);
    real.group0_rows = std::move(ones);
    real.group1_rows = std::move(others);
    real.dropped_rows = table.dropped_rows;
    return real;
}

std::int64_t count_bound_violations(const std::vector<TrialRecord>& records,
                                    double epsilon, double rho) {
    if (!(epsilon > 0.0) || !(rho > 0.0))
        throw UsageError("count_bound_violations: epsilon and rho must be positive");
    std::int64_t violations = 0;
    for (const auto& r : records) {
        if (r.proxy_dist_x > 3.0 * epsilon || r.proxy_dist_y > 3.0 * epsilon) continue;
        if (!std::isnan(r.simple_abs_over_eps) && r.simple_abs_over_eps > 6.0)
            ++violations;
        if (!std::isnan(r.queryopt_abs_over_eps) &&
            r.queryopt_abs_over_eps > 4.0 * rho + 6.0)
            ++violations;
    }
    return violations;
}

DeltaOutcome run_grid_point(const ExperimentConfig& config, double delta, int repeat,
                            const PreparedReal* real) {
    World world;
    if (config.mode == "synthetic") {
        world = make_synthetic_world(config, delta, repeat);
    } else if (config.mode == "adversarial") {
        world = make_adversarial_world(config, delta, repeat);
    } else if (config.mode == "real") {
        if (!real) throw UsageError("run_grid_point: real mode needs a prepared dataset");
        world = make_real_world(config, *real, delta, repeat);
    } else {
        throw ConfigError("config: mode must be synthetic, real or adversarial");
    }

    DeltaOutcome outcome;
    outcome.delta = delta;
    outcome.repeat = repeat;
    outcome.n_per_group = world.samples[0].size();

    const std::vector<std::int64_t> sizes = {world.samples[0].size(),
                                             world.samples[1].size()};
    outcome.simple_queries = cross_pair_count(sizes);
    outcome.simple_lazy = outcome.simple_queries > config.materialize_threshold;
    SimpleModel simple = train_simple(
        world.samples, world.metrics, *world.oracle_simple,
        outcome.simple_lazy ? QueryMode::kLazy : QueryMode::kEager);

    Params params;
    params.epsilon = config.epsilon;
    params.delta = delta;
    params.gamma = 2;
    params.rho = config.rho;
    auto selections = select_all_representatives(world.samples, world.metrics, params);
    std::vector<std::int64_t> rep_sizes;
    for (const auto& sel : selections)
        rep_sizes.push_back(static_cast<std::int64_t>(sel.representatives.size()));
    outcome.rep_counts = rep_sizes;
    outcome.queryopt_queries = cross_pair_count(rep_sizes);
    outcome.queryopt_lazy = outcome.queryopt_queries > config.materialize_threshold;
    RepModel queryopt = assemble_queryopt(
        world.samples, world.metrics, std::move(selections), params,
        *world.oracle_queryopt,
        outcome.queryopt_lazy ? QueryMode::kLazy : QueryMode::kEager);

    outcome.records = run_trials(&simple, &queryopt, *world.oracle_simple,
                                 world.test_pairs, config.trials, config.epsilon);
    outcome.simple_billed = world.oracle_simple->ledger().count();
    outcome.queryopt_billed = world.oracle_queryopt->ledger().count();
    outcome.errors = summarize_errors(outcome.records, default_rel_err_edges(),
                                      default_abs_over_eps_edges());
    outcome.decrease_pct =
        query_decrease_pct(outcome.simple_queries, outcome.queryopt_queries);
    outcome.bound_violations =
        count_bound_violations(outcome.records, config.epsilon, config.rho);
    return outcome;
}

RunResult run_experiment(const ExperimentConfig& config) {
    config.validate();
    PreparedReal real;
    const bool is_real = config.mode == "real";
    if (is_real) real = prepare_real(config);

    struct GridPoint {
        double delta;
        int repeat;
    };
    std::vector<GridPoint> grid;
    for (double delta : config.deltas)
        for (int r = 0; r < config.repeats; ++r) grid.push_back({delta, r});

    RunResult result;
    result.outcomes.resize(grid.size());
    auto evaluate = [&](std::size_t i) {
        DeltaOutcome o = run_grid_point(config, grid[i].delta, grid[i].repeat,
                                        is_real ? &real : nullptr);
        o.out_dir = "delta_" + format_double(grid[i].delta) + "_rep" +
                    std::to_string(grid[i].repeat);
        write_grid_point(config, o);
        return o;
    };

    if (config.parallel && grid.size() > 1) {
        std::vector<std::future<DeltaOutcome>> futures;
        futures.reserve(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            futures.push_back(std::async(std::launch::async, evaluate, i));
        for (std::size_t i = 0; i < grid.size(); ++i)
            result.outcomes[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) result.outcomes[i] = evaluate(i);
    }

    json grid_json = json::array();
    for (const auto& o : result.outcomes) {
        grid_json.push_back(outcome_digest(o));
        result.any_violation = result.any_violation || o.bound_violations > 0;
    }

    json by_delta = json::array();
    for (double delta : config.deltas) {
        double mean = 0.0;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -std::numeric_limits<double>::infinity();
        int count = 0;
        for (const auto& o : result.outcomes) {
            if (o.delta != delta) continue;
            mean += o.decrease_pct;
            lo = std::min(lo, o.decrease_pct);
            hi = std::max(hi, o.decrease_pct);
            ++count;
        }
        mean /= static_cast<double>(count);
        by_delta.push_back(json{{"delta", delta},
                                {"repeats", count},
                                {"decrease_pct_mean", mean},
                                {"decrease_pct_min", lo},
                                {"decrease_pct_max", hi}});
    }

    result.rollup = json{{"config", to_json(config)},
                         {"grid", std::move(grid_json)},
                         {"by_delta", std::move(by_delta)}};
    if (is_real) result.rollup["dropped_rows"] = real.dropped_rows;
    namespace fs = std::filesystem;
    fs::create_directories(config.out);
    save_json(result.rollup, (fs::path(config.out) / "summary.json").string());
    return result;
}

SigmaScan run_sigma_scan(const ExperimentConfig& config, std::int64_t draws) {
    if (draws < 1) throw UsageError("run_sigma_scan: need at least one draw");
    Rng wrng = Rng::stream(config.seed, "weights/sigma-scan");
    const OracleSpec spec = draw_weights(config.dim, 2, wrng);

    Rng drng = Rng::stream(config.seed, "data/sigma-scan");
    MixtureDistribution dist0(
        0, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    MixtureDistribution dist1(
        1, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));

    const auto& beta = spec.beta_for(0, 1);
    Rng trng = Rng::stream(config.seed, "trials/sigma-scan");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(draws));
    std::int64_t in_band = 0;
    for (std::int64_t i = 0; i < draws; ++i) {
        const Element x = dist0.draw(trng);
        const Element y = dist1.draw(trng);
        const double sigma = cross_similarity(beta, x, y);
        values.push_back(sigma);
        if (sigma >= 7.0 && sigma < 8.0) ++in_band;
    }
    std::sort(values.begin(), values.end());

    SigmaScan scan;
    scan.draws = draws;
    scan.min = values.front();
    scan.max = values.back();
    scan.median = quantile_nearest_rank(values, 0.5);
    scan.frac_in_7_8 = static_cast<double>(in_band) / static_cast<double>(draws);
    return scan;
}

}  // namespace simlearn
