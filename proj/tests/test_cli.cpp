#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "simlearn/cli/commands.hpp"
#include "simlearn/cli/config.hpp"
#include "simlearn/cli/experiment.hpp"
#include "simlearn/core/params.hpp"
#include "simlearn/io/json_io.hpp"

using namespace simlearn;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("simlearn_cli_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

/// Small, fast synthetic grid point: n = 3 per group at delta 0.5.
ExperimentConfig tiny_config(const std::string& out) {
    ExperimentConfig c;
    c.deltas = {0.5};
    c.dim = 2;
    c.mixture_components = 2;
    c.u_var = 0.5;
    c.trials = 40;
    c.repeats = 2;
    c.seed = 11;
    c.out = out;
    return c;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("empty config json yields the documented defaults") {
    const ExperimentConfig c = config_from_json(nlohmann::ordered_json::object());
    CHECK(c.mode == "synthetic");
    CHECK(c.deltas == std::vector<double>{0.1});
    CHECK(c.epsilon == 0.1);
    CHECK(c.rho == 12.0);
    CHECK(c.dim == 20);
    CHECK(c.mixture_components == 16);
    CHECK(c.trials == 1000);
    CHECK(c.materialize_threshold == 10000000);
}

TEST_CASE("config round trips through json") {
    ExperimentConfig c = tiny_config("somewhere");
    c.mode = "adversarial";
    c.adversarial_support = 123;
    const ExperimentConfig back = config_from_json(to_json(c));
    CHECK(back.mode == c.mode);
    CHECK(back.deltas == c.deltas);
    CHECK(back.adversarial_support == c.adversarial_support);
    CHECK(back.seed == c.seed);
    CHECK(back.out == c.out);
    CHECK(back.repeats == c.repeats);
}

TEST_CASE("unknown keys and bad values are rejected") {
    CHECK_THROWS_WITH_AS(config_from_json({{"tirals", 10}}),
                         doctest::Contains("tirals"), ConfigError);
    CHECK_THROWS_AS(config_from_json(nlohmann::ordered_json::array()), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"mode", "bogus"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"deltas", nlohmann::ordered_json::array()}}),
                    ConfigError);
    CHECK_THROWS_AS(config_from_json({{"deltas", {0.5, 1.0}}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"epsilon", 0.0}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"trials", 0}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"repeats", 0}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"dim", "twenty"}}), ConfigError);
    CHECK_THROWS_AS(config_from_json({{"mode", "real"}}), ConfigError);
}

TEST_CASE("load_config reports missing and broken files as config errors") {
    TempDir dir;
    CHECK_THROWS_AS(load_config(dir.file("absent.json")), ConfigError);
    std::ofstream(dir.file("broken.json")) << "{";
    CHECK_THROWS_AS(load_config(dir.file("broken.json")), ConfigError);
}

TEST_CASE("experiment grid is delta-major with eager queries fully billed") {
    TempDir dir;
    ExperimentConfig c = tiny_config(dir.file("run"));
    c.deltas = {0.5, 0.9};
    const RunResult result = run_experiment(c);

    REQUIRE(result.outcomes.size() == 4);
    CHECK(result.outcomes[0].delta == 0.5);
    CHECK(result.outcomes[0].repeat == 0);
    CHECK(result.outcomes[1].delta == 0.5);
    CHECK(result.outcomes[1].repeat == 1);
    CHECK(result.outcomes[2].delta == 0.9);
    CHECK(result.outcomes[3].repeat == 1);

    for (const auto& o : result.outcomes) {
        CHECK(o.n_per_group == sample_budget(o.delta));
        CHECK_FALSE(o.simple_lazy);
        CHECK_FALSE(o.queryopt_lazy);
        // eager mode queries everything up front, so billing matches the
        // analytic table sizes exactly
        CHECK(o.simple_queries == o.n_per_group * o.n_per_group);
        CHECK(o.simple_billed == o.simple_queries);
        CHECK(o.queryopt_billed == o.queryopt_queries);
        CHECK(o.queryopt_queries <= o.simple_queries);
        CHECK(o.rep_counts.size() == 2);
        CHECK(o.records.size() == 40);
        // the substitution bounds hold unconditionally; a breach is a bug
        CHECK(o.bound_violations == 0);
    }
    CHECK_FALSE(result.any_violation);

    CHECK(fs::exists(dir.path / "run" / "summary.json"));
    const fs::path point = fs::path(c.out) / result.outcomes[0].out_dir;
    CHECK(result.outcomes[0].out_dir == "delta_0.5_rep0");
    CHECK(fs::exists(point / "trials.csv"));
    CHECK(fs::exists(point / "histograms.csv"));
    CHECK(fs::exists(point / "summary.json"));
}

TEST_CASE("identical configs rewrite byte-identical artifacts") {
    TempDir dir;
    const ExperimentConfig c = tiny_config(dir.file("twice"));
    const RunResult first = run_experiment(c);
    const fs::path point = fs::path(c.out) / first.outcomes[0].out_dir;
    const std::string rollup = slurp(dir.file("twice") + "/summary.json");
    const std::string summary = slurp((point / "summary.json").string());
    const std::string trials = slurp((point / "trials.csv").string());

    run_experiment(c);
    CHECK(slurp(dir.file("twice") + "/summary.json") == rollup);
    CHECK(slurp((point / "summary.json").string()) == summary);
    CHECK(slurp((point / "trials.csv").string()) == trials);
}

TEST_CASE("oversized cross tables fall back to lazy querying") {
    TempDir dir;
    ExperimentConfig c = tiny_config(dir.file("lazy"));
    c.repeats = 1;
    c.materialize_threshold = 4;  // below the 3x3 cross table
    const RunResult result = run_experiment(c);
    REQUIRE(result.outcomes.size() == 1);
    const DeltaOutcome& o = result.outcomes[0];
    CHECK(o.simple_lazy);
    CHECK(o.simple_queries == 9);  // analytic size is still reported
    CHECK(o.simple_billed > 0);
    CHECK(o.simple_billed <= c.trials);  // at most one fresh pair per trial
    // each learner degrades on its own table size; the representative table
    // may stay under the threshold even when the full table does not
    CHECK(o.queryopt_lazy == (o.queryopt_queries > c.materialize_threshold));
    if (o.queryopt_lazy)
        CHECK(o.queryopt_billed <= c.trials);
    else
        CHECK(o.queryopt_billed == o.queryopt_queries);
    CHECK(o.bound_violations == 0);
}

TEST_CASE("sigma scan is deterministic in the seed") {
    ExperimentConfig c;
    c.dim = 5;
    c.mixture_components = 4;
    c.seed = 3;
    const SigmaScan a = run_sigma_scan(c, 300);
    const SigmaScan b = run_sigma_scan(c, 300);
    CHECK(a.draws == 300);
    CHECK(a.min == b.min);
    CHECK(a.median == b.median);
    CHECK(a.max == b.max);
    CHECK(a.frac_in_7_8 == b.frac_in_7_8);
    CHECK(a.min >= 0.0);
    CHECK(a.min <= a.median);
    CHECK(a.median <= a.max);

    c.seed = 4;
    const SigmaScan other = run_sigma_scan(c, 300);
    CHECK(other.median != a.median);
}

TEST_CASE("generated dataset feeds the real-mode pipeline end to end") {
    TempDir dir;
    ExperimentConfig gen;
    gen.dim = 3;
    gen.mixture_components = 2;
    gen.u_var = 0.5;
    gen.rows_per_group = 120;
    gen.seed = 9;
    gen.out = dir.file("gen");
    std::ostringstream log;
    REQUIRE(cmd_gen_data(gen, log) == 0);
    REQUIRE(fs::exists(dir.path / "gen" / "dataset.csv"));
    REQUIRE(fs::exists(dir.path / "gen" / "schema.json"));

    ExperimentConfig real = load_config(dir.file("gen") + "/real_config.json");
    CHECK(real.mode == "real");
    real.deltas = {0.5};
    real.trials = 15;
    real.repeats = 1;
    real.seed = 9;
    real.out = dir.file("genrun");
    real.validate();

    const RunResult result = run_experiment(real);
    REQUIRE(result.outcomes.size() == 1);
    CHECK(result.outcomes[0].n_per_group == 3);
    CHECK(result.outcomes[0].records.size() == 15);
    CHECK(result.outcomes[0].bound_violations == 0);

    // training plus test rows must fit inside the smaller group
    real.trials = 1000;
    CHECK_THROWS_AS(run_experiment(real), ConfigError);
}

TEST_CASE("run command reports each grid point and its artifacts") {
    TempDir dir;
    const ExperimentConfig c = tiny_config(dir.file("cmd"));
    std::ostringstream log;
    CHECK(cmd_run(c, log) == 0);
    const std::string text = log.str();
    CHECK(text.find("delta=0.5 repeat=0") != std::string::npos);
    CHECK(text.find("delta=0.5 repeat=1") != std::string::npos);
    CHECK(text.find("artifacts: ") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("rare command writes estimates for every delta and group") {
    TempDir dir;
    ExperimentConfig c;
    c.mode = "adversarial";
    c.adversarial_support = 100000;
    c.deltas = {0.1, 0.5};
    c.rare_outer = 40;
    c.rare_inner = 100;
    c.seed = 2;
    c.out = dir.file("rare");
    std::ostringstream log;
    REQUIRE(cmd_rare(c, log) == 0);
    const json report = load_json(dir.file("rare") + "/rare.json");
    REQUIRE(report.contains("estimates"));
    CHECK(report["estimates"].size() == 4);  // two deltas x two groups
}

TEST_CASE("verify command passes its own property suites") {
    ExperimentConfig c;  // defaults: the scale the suites were tuned on
    std::ostringstream log;
    CHECK(cmd_verify(c, log) == 0);
    const std::string text = log.str();
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

}  // TEST_SUITE
