#include "simlearn/cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>
#include <vector>

#include "simlearn/analysis/cover.hpp"
#include "simlearn/analysis/rare.hpp"
#include "simlearn/analysis/trials.hpp"
#include "simlearn/cli/experiment.hpp"
#include "simlearn/core/params.hpp"
#include "simlearn/datagen/adversarial.hpp"
#include "simlearn/datagen/mixture.hpp"
#include "simlearn/datagen/triples.hpp"
#include "simlearn/io/csv_out.hpp"
#include "simlearn/io/json_io.hpp"
#include "simlearn/learners/queryopt.hpp"
#include "simlearn/learners/simple.hpp"
#include "simlearn/oracle/properties.hpp"
#include "simlearn/oracle/simulated.hpp"

namespace simlearn {

namespace {

namespace fs = std::filesystem;

std::string join_counts(const std::vector<std::int64_t>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

SuiteResult suite_detour_properties(const ExperimentConfig& config) {
    Rng wrng = Rng::stream(config.seed, "verify/weights");
    const OracleSpec spec = draw_weights(config.dim, 2, wrng);
    SimulatedOracle oracle(spec);

    Rng drng = Rng::stream(config.seed, "verify/data");
    MixtureDistribution d0(
        0, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    MixtureDistribution d1(
        1, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    Rng trng = Rng::stream(config.seed, "verify/triples");
    const auto triples = make_property_triples(d0, d1, 100000, trng);

    const WeightedEuclideanMetric m0 = spec.intra_metric(0);
    const WeightedEuclideanMetric m1 = spec.intra_metric(1);
    const PropertyReport report = verify_cross_metric_properties(
        m0, m1,
        [&](const Element& a, const Element& b) { return oracle.truth(a, b); },
        triples, 1e-9);

    std::ostringstream detail;
    detail << "triples=" << report.checked << " violations=" << report.violations
           << " worst_slack=" << format_double(report.worst_slack);
    return {"detour-properties", report.violations == 0, detail.str()};
}

SuiteResult suite_clustering_invariants(const ExperimentConfig& config) {
    std::int64_t checked = 0;
    std::int64_t failures = 0;
    const double radius = config.rho * config.epsilon;
    for (std::uint64_t round = 0; round < 3; ++round) {
        Rng drng = Rng::stream(config.seed + round, "verify/cluster");
        MixtureDistribution dist(
            0, make_mixture_group(config.dim, config.mixture_components, config.u_var,
                                  drng));
        const GroupSample sample = collect_sample(dist, 150, drng);
        const WeightedEuclideanMetric metric(
            std::vector<double>(static_cast<std::size_t>(config.dim), 1.0));
        const RepSelection sel =
            select_representatives(sample, metric, config.epsilon, config.rho);
        const RepSelection again =
            select_representatives(sample, metric, config.epsilon, config.rho);
        if (sel.representatives != again.representatives ||
            sel.assignment != again.assignment)
            ++failures;
        for (std::size_t a = 0; a < sel.representatives.size(); ++a) {
            const auto& ea =
                sample.elements[static_cast<std::size_t>(sel.representatives[a])];
            if (sel.assignment[static_cast<std::size_t>(sel.representatives[a])] !=
                sel.representatives[a])
                ++failures;
            for (std::size_t b = a + 1; b < sel.representatives.size(); ++b) {
                const auto& eb =
                    sample.elements[static_cast<std::size_t>(sel.representatives[b])];
                ++checked;
                if (!(metric.distance(ea, eb) > radius)) ++failures;
            }
        }
        for (std::size_t i = 0; i < sample.elements.size(); ++i) {
            const std::int64_t head = sel.assignment[i];
            ++checked;
            if (head < 0 ||
                metric.distance(sample.elements[i],
                                sample.elements[static_cast<std::size_t>(head)]) >
                    2.0 * radius)
                ++failures;
        }
    }
    std::ostringstream detail;
    detail << "checks=" << checked << " failures=" << failures;
    return {"clustering-invariants", failures == 0, detail.str()};
}

SuiteResult suite_cover_bound(const ExperimentConfig& config) {
    Rng rng = Rng::stream(config.seed, "verify/cover");
    std::int64_t instances = 0;
    std::int64_t failures = 0;
    for (int i = 0; i < 200; ++i) {
        const int dim = (i % 2 == 0) ? 1 : 2;
        const auto n = static_cast<std::int64_t>(2 + rng.index(11));  // 2..12
        GroupSample sample;
        sample.group = 0;
        for (std::int64_t p = 0; p < n; ++p) {
            std::vector<double> f(static_cast<std::size_t>(dim));
            for (auto& v : f) v = rng.uniform(0.0, 5.0);
            sample.elements.push_back(Element{0, p, std::move(f)});
        }
        const WeightedEuclideanMetric metric(
            std::vector<double>(static_cast<std::size_t>(dim), 1.0));
        const double radius = rng.uniform(0.2, 2.0);

        const RepSelection sel = select_representatives(sample, metric, radius, 1.0);
        const int opt_half = bruteforce_set_cover_opt(sample, metric, radius / 2.0);
        const int opt_full = bruteforce_set_cover_opt(sample, metric, radius);
        ++instances;
        const bool ok = static_cast<int>(sel.representatives.size()) <= opt_half &&
                        opt_half <= static_cast<int>(n) && opt_full <= opt_half;
        if (!ok) ++failures;
    }
    std::ostringstream detail;
    detail << "instances=" << instances << " failures=" << failures;
    return {"cover-bound", failures == 0, detail.str()};
}

SuiteResult suite_uncorrelated_band(const ExperimentConfig& config) {
    const std::uint64_t sigma_seed = Rng::stream(config.seed, "verify/band").next_u64();
    AdversarialInstance inst =
        make_single_vs_uniform_instance(config.adversarial_support, sigma_seed);

    Rng drng = Rng::stream(config.seed, "verify/band-data");
    std::vector<GroupSample> samples = {collect_sample(*inst.group1, 100, drng),
                                        collect_sample(*inst.group2, 100, drng)};
    auto simple = train_simple(samples, {inst.metric1, inst.metric2}, *inst.oracle);

    PairSource pairs = make_distribution_pair_source(
        inst.group1, inst.group2, Rng::stream(config.seed, "verify/band-trials"));
    const auto records = run_trials(&simple, nullptr, *inst.oracle, pairs, 1000,
                                    config.epsilon);
    std::int64_t beyond = 0;
    for (const auto& r : records)
        if (std::abs(r.simple_prediction - r.true_sigma) > config.epsilon) ++beyond;
    const double empirical = static_cast<double>(beyond) / 1000.0;
    const double analytic =
        1.0 - (2.0 * config.epsilon - config.epsilon * config.epsilon);

    std::ostringstream detail;
    detail << "empirical=" << empirical << " analytic_band=" << format_double(analytic);
    return {"uncorrelated-band", empirical >= 0.70, detail.str()};
}

SuiteResult suite_rare_analytic(const ExperimentConfig& config) {
    DiscreteMetric metric;
    bool pass = true;
    std::ostringstream detail;

    Rng r1 = Rng::stream(config.seed, "verify/rare1");
    PointMassDistribution point(0, {0.0});
    const auto e1 = estimate_rare_probability(point, metric, 0.5, 0.3, 200, 10000, r1);
    pass = pass && e1.p_hat == 0.0;
    detail << "point_mass=" << e1.p_hat;

    Rng r2 = Rng::stream(config.seed, "verify/rare2");
    UniformIdDistribution wide(0, config.adversarial_support);
    const auto e2 = estimate_rare_probability(wide, metric, 0.5, 0.1, 200, 10000, r2);
    pass = pass && e2.p_hat == 1.0;
    detail << " uniform_wide=" << e2.p_hat;

    Rng r3 = Rng::stream(config.seed, "verify/rare3");
    FiniteSupportSpec two;
    two.support = {{0.0}, {1.0}};
    two.probabilities = {0.5, 0.5};
    FiniteSupportDistribution coin(0, two);
    const auto e3 = estimate_rare_probability(coin, metric, 0.5, 0.3, 200, 10000, r3);
    pass = pass && e3.p_hat == 0.0;
    detail << " two_point=" << e3.p_hat;

    return {"rare-analytic", pass, detail.str()};
}

SuiteResult suite_rare_convergence(const ExperimentConfig& config) {
    DiscreteMetric metric;
    FiniteSupportSpec three;
    three.support = {{0.0}, {1.0}, {2.0}};
    three.probabilities = {0.7, 0.2, 0.1};
    const double exact = 0.3;  // mass of the two sub-threshold points

    double prev_gap = -1.0;
    bool pass = true;
    std::ostringstream detail;
    detail << "gaps=";
    for (std::int64_t inner : {100, 200, 400}) {
        Rng rng = Rng::stream(config.seed, "verify/rare-conv");
        FiniteSupportDistribution dist(0, three);
        const auto est =
            estimate_rare_probability(dist, metric, 0.5, 0.5, 500, inner, rng);
        const double gap = std::abs(est.p_hat - exact);
        if (prev_gap >= 0.0 && gap > prev_gap) pass = false;
        prev_gap = gap;
        detail << format_double(gap) << " ";
    }
    return {"rare-convergence", pass, detail.str()};
}

SuiteResult suite_ledger_dedup(const ExperimentConfig& config) {
    Rng wrng = Rng::stream(config.seed, "verify/ledger");
    SimulatedOracle oracle(draw_weights(3, 2, wrng));
    const Element x{0, 0, {0.0, 1.0, 2.0}};
    const Element y{1, 0, {1.0, 0.0, 2.0}};
    const Element y2{1, 1, {0.5, 0.5, 0.5}};
    oracle.query(x, y);
    oracle.query(y, x);
    oracle.query(x, y);
    oracle.query(x, y2);
    oracle.truth(x, y2);
    const bool pass = oracle.ledger().count() == 2;
    std::ostringstream detail;
    detail << "billed=" << oracle.ledger().count() << " expected=2";
    return {"ledger-dedup", pass, detail.str()};
}

SuiteResult suite_cluster_count_report(const ExperimentConfig& config) {
    // Soft check: representative counts against the 1/delta + p_hat * N
    // budget. Reported for inspection; Monte Carlo noise keeps it advisory,
    // so the suite never fails on the comparison itself.
    const double delta = config.deltas.front();
    const std::string tag = format_double(delta) + "/0";
    Rng wrng = Rng::stream(config.seed, "weights/" + tag);
    const OracleSpec spec = draw_weights(config.dim, 2, wrng);

    Rng drng = Rng::stream(config.seed, "data/" + tag);
    MixtureDistribution d0(
        0, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    MixtureDistribution d1(
        1, make_mixture_group(config.dim, config.mixture_components, config.u_var, drng));
    const std::int64_t n = sample_budget(delta);
    std::vector<GroupSample> samples = {collect_sample(d0, n, drng),
                                        collect_sample(d1, n, drng)};

    Params params;
    params.epsilon = config.epsilon;
    params.delta = delta;
    params.rho = config.rho;
    std::vector<std::shared_ptr<const Metric>> metrics = {
        std::make_shared<WeightedEuclideanMetric>(spec.alpha[0]),
        std::make_shared<WeightedEuclideanMetric>(spec.alpha[1])};
    const auto selections = select_all_representatives(samples, metrics, params);

    Rng rrng = Rng::stream(config.seed, "verify/cluster-count");
    std::ostringstream detail;
    for (int g = 0; g < 2; ++g) {
        MixtureDistribution& dist = g == 0 ? d0 : d1;
        const auto est = estimate_rare_probability(
            dist, *metrics[static_cast<std::size_t>(g)], config.epsilon, delta, 100, 0,
            rrng);
        const double budget = 1.0 / delta + est.p_hat * static_cast<double>(n);
        detail << "group" << g << ": reps="
               << selections[static_cast<std::size_t>(g)].representatives.size()
               << " budget~" << format_double(budget) << " (p_hat=" << est.p_hat
               << ") ";
    }
    return {"cluster-count-report", true, detail.str()};
}

void write_dataset_csv(const std::string& path,
                       const std::vector<GroupSample>& samples,
                       const std::string& group_column,
                       const std::vector<std::string>& labels, int dim) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("gen-data: cannot open '" + path + "'");
    for (int c = 0; c < dim; ++c) out << 'f' << c << ',';
    out << group_column << '\n';
    for (std::size_t g = 0; g < samples.size(); ++g) {
        for (const auto& e : samples[g].elements) {
            for (double v : e.features) out << format_double(v) << ',';
            out << labels[g] << '\n';
        }
    }
    if (!out) throw DataError("gen-data: write to '" + path + "' failed");
}

}  // namespace

int cmd_run(const ExperimentConfig& config, std::ostream& out) {
    const RunResult result = run_experiment(config);
    for (const auto& o : result.outcomes) {
        out << "delta=" << format_double(o.delta) << " repeat=" << o.repeat
            << " n=" << o.n_per_group << " reps=[" << join_counts(o.rep_counts) << "]"
            << " queries simple=" << o.simple_queries
            << (o.simple_lazy ? " (lazy)" : "")
            << " queryopt=" << o.queryopt_queries
            << (o.queryopt_lazy ? " (lazy)" : "")
            << " decrease=" << format_double(o.decrease_pct) << "%"
            << " bound_violations=" << o.bound_violations << '\n';
        if (o.simple_lazy)
            out << "  note: full cross table above materialize_threshold; "
                   "lazy mode, analytic count reported\n";
        if (o.queryopt_lazy)
            out << "  note: representative table above materialize_threshold; "
                   "lazy mode, analytic count reported\n";
    }
    out << "artifacts: " << config.out << "/summary.json\n";
    if (result.any_violation) {
        out << "FAIL: substitution error budget breached\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const ExperimentConfig& config, std::ostream& out) {
    const std::vector<SuiteResult> suites = {
        suite_detour_properties(config), suite_clustering_invariants(config),
        suite_cover_bound(config),       suite_uncorrelated_band(config),
        suite_rare_analytic(config),     suite_rare_convergence(config),
        suite_ledger_dedup(config),      suite_cluster_count_report(config)};
    bool all_pass = true;
    for (const auto& s : suites) {
        out << (s.pass ? "PASS" : "FAIL") << ' ' << s.name << ": " << s.detail << '\n';
        all_pass = all_pass && s.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_rare(const ExperimentConfig& config, std::ostream& out) {
    json report = json::array();
    for (double delta : config.deltas) {
        const std::string tag = format_double(delta) + "/0";
        std::vector<std::unique_ptr<GroupDistribution>> dists;
        std::vector<std::unique_ptr<Metric>> metrics;
        if (config.mode == "synthetic" || config.mode == "real") {
            Rng wrng = Rng::stream(config.seed, "weights/" + tag);
            int dim = config.dim;
            PreparedReal real;
            if (config.mode == "real") {
                real = prepare_real(config);
                dim = static_cast<int>(real.standardized.cols);
            }
            const OracleSpec spec = draw_weights(dim, 2, wrng);
            for (int g = 0; g < 2; ++g)
                metrics.push_back(std::make_unique<WeightedEuclideanMetric>(
                    spec.alpha[static_cast<std::size_t>(g)]));
            if (config.mode == "synthetic") {
                Rng drng = Rng::stream(config.seed, "data/" + tag);
                dists.push_back(std::make_unique<MixtureDistribution>(
                    0, make_mixture_group(config.dim, config.mixture_components,
                                          config.u_var, drng)));
                dists.push_back(std::make_unique<MixtureDistribution>(
                    1, make_mixture_group(config.dim, config.mixture_components,
                                          config.u_var, drng)));
            } else {
                for (int g = 0; g < 2; ++g) {
                    const auto& rows = g == 0 ? real.group0_rows : real.group1_rows;
                    FiniteSupportSpec support;
                    support.probabilities.assign(rows.size(),
                                                 1.0 / static_cast<double>(rows.size()));
                    double sum = 0.0;
                    for (double p : support.probabilities) sum += p;
                    support.probabilities.back() += 1.0 - sum;  // absorb rounding drift
                    for (std::int64_t r : rows)
                        support.support.push_back(real.standardized.row(r));
                    dists.push_back(std::make_unique<FiniteSupportDistribution>(
                        g, std::move(support)));
                }
            }
        } else {
            dists.push_back(std::make_unique<PointMassDistribution>(
                0, std::vector<double>{0.0}));
            dists.push_back(std::make_unique<UniformIdDistribution>(
                1, config.adversarial_support));
            metrics.push_back(std::make_unique<DiscreteMetric>());
            metrics.push_back(std::make_unique<DiscreteMetric>());
        }
        for (int g = 0; g < 2; ++g) {
            Rng rng = Rng::stream(config.seed, "rare/" + tag + "/" + std::to_string(g));
            const auto est = estimate_rare_probability(
                *dists[static_cast<std::size_t>(g)],
                *metrics[static_cast<std::size_t>(g)], config.epsilon, delta,
                config.rare_outer, config.rare_inner, rng);
            out << "delta=" << format_double(delta) << " group=" << g
                << " p_hat=" << format_double(est.p_hat) << " (outer=" << est.outer
                << " inner=" << est.inner << ")\n";
            report.push_back(json{{"delta", delta},
                                  {"group", g},
                                  {"p_hat", est.p_hat},
                                  {"outer", est.outer},
                                  {"inner", est.inner}});
        }
    }
    fs::create_directories(config.out);
    save_json(json{{"config", to_json(config)}, {"estimates", std::move(report)}},
              (fs::path(config.out) / "rare.json").string());
    return 0;
}

int cmd_sigma_scan(const ExperimentConfig& config, std::ostream& out) {
    const SigmaScan scan = run_sigma_scan(config, 1000);
    out << "draws=" << scan.draws << " min=" << format_double(scan.min)
        << " median=" << format_double(scan.median)
        << " max=" << format_double(scan.max)
        << " frac_in_[7,8)=" << format_double(scan.frac_in_7_8) << '\n';
    fs::create_directories(config.out);
    save_json(json{{"config", to_json(config)},
                   {"draws", scan.draws},
                   {"min", scan.min},
                   {"median", scan.median},
                   {"max", scan.max},
                   {"frac_in_7_8", scan.frac_in_7_8}},
              (fs::path(config.out) / "sigma_scan.json").string());
    return 0;
}

int cmd_gen_data(const ExperimentConfig& config, std::ostream& out) {
    Rng rng = Rng::stream(config.seed, "gen-data");
    MixtureDistribution d0(
        0, make_mixture_group(config.dim, config.mixture_components, config.u_var, rng));
    MixtureDistribution d1(
        1, make_mixture_group(config.dim, config.mixture_components, config.u_var, rng));
    const std::vector<GroupSample> samples = {
        collect_sample(d0, config.rows_per_group, rng),
        collect_sample(d1, config.rows_per_group, rng)};

    const std::string group_column =
        config.group_column.empty() ? "group" : config.group_column;
    const std::vector<std::string> labels = {"g0", "g1"};

    fs::create_directories(config.out);
    const std::string dataset_path = (fs::path(config.out) / "dataset.csv").string();
    const std::string schema_path = (fs::path(config.out) / "schema.json").string();
    write_dataset_csv(dataset_path, samples, group_column, labels, config.dim);

    TableSchema schema;
    for (int c = 0; c < config.dim; ++c)
        schema.columns.push_back(
            ColumnSchema{"f" + std::to_string(c), ColumnKind::kNumeric});
    schema.columns.push_back(ColumnSchema{group_column, ColumnKind::kCategorical});
    save_json(to_json(schema), schema_path);

    ExperimentConfig ready = config;
    ready.mode = "real";
    ready.dataset = dataset_path;
    ready.schema = schema_path;
    ready.group_column = group_column;
    ready.group_one_values = {labels[0]};
    save_json(to_json(ready), (fs::path(config.out) / "real_config.json").string());

    out << "wrote " << dataset_path << " (" << 2 * config.rows_per_group << " rows), "
        << schema_path << ", real_config.json\n";
    return 0;
}

}  // namespace simlearn
