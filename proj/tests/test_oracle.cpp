#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "simlearn/datagen/mixture.hpp"
#include "simlearn/datagen/triples.hpp"
#include "simlearn/oracle/properties.hpp"
#include "simlearn/oracle/simulated.hpp"
#include "simlearn/oracle/weights.hpp"

using namespace simlearn;

namespace {

Element make(int group, std::int64_t index, std::vector<double> f) {
    return Element{group, index, std::move(f)};
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("group pairs are canonically ordered") {
    CHECK(make_group_pair(2, 0) == GroupPair{0, 2});
    CHECK(make_group_pair(0, 2) == GroupPair{0, 2});
    CHECK_THROWS_AS(make_group_pair(1, 1), UsageError);
}

TEST_CASE("drawn weights have the right shape and obey the beta cap") {
    Rng rng = Rng::stream(5, "weights");
    const OracleSpec spec = draw_weights(6, 3, rng);
    CHECK(spec.alpha.size() == 3);
    CHECK(spec.beta.size() == 3);
    for (const auto& a : spec.alpha) {
        CHECK(a.size() == 6);
        for (double w : a) {
            CHECK(w >= 0.0);
            CHECK(w < 1.0);
        }
    }
    for (const auto& [pair, b] : spec.beta) {
        REQUIRE(b.size() == 6);
        for (std::size_t i = 0; i < b.size(); ++i)
            CHECK(b[i] <= std::min(spec.alpha[pair.first][i], spec.alpha[pair.second][i]));
    }
    CHECK_NOTHROW(spec.validate());
}

TEST_CASE("drawing weights is reproducible per stream") {
    Rng a = Rng::stream(17, "weights");
    Rng b = Rng::stream(17, "weights");
    const OracleSpec sa = draw_weights(4, 2, a);
    const OracleSpec sb = draw_weights(4, 2, b);
    CHECK(sa.alpha == sb.alpha);
    CHECK(sa.beta == sb.beta);
}

TEST_CASE("spec validation rejects malformed structures") {
    Rng rng(1);
    OracleSpec spec = draw_weights(3, 2, rng);
    OracleSpec bad = spec;
    bad.beta.clear();
    CHECK_THROWS_AS(bad.validate(), UsageError);
    bad = spec;
    bad.beta.begin()->second = {2.0, 2.0, 2.0};  // above every alpha cap
    CHECK_THROWS_AS(bad.validate(), UsageError);
    bad = spec;
    bad.alpha[0].pop_back();
    CHECK_THROWS_AS(bad.validate(), ShapeError);
    bad = spec;
    bad.alpha = {bad.alpha[0]};
    CHECK_THROWS_AS(bad.validate(), UsageError);
}

TEST_CASE("cross similarity on known weights") {
    const std::vector<double> beta = {1.0, 0.0};
    CHECK(cross_similarity(beta, make(0, 0, {0.0, 3.0}), make(1, 0, {3.0, -5.0})) == 3.0);
    CHECK_THROWS_AS(cross_similarity(beta, make(0, 0, {0, 0}), make(0, 1, {1, 1})),
                    UsageError);
    CHECK_THROWS_AS(cross_similarity(beta, make(0, 0, {0}), make(1, 0, {1, 1})),
                    ShapeError);
}

TEST_CASE("simulated oracle serves truth and bills distinct pairs once") {
    Rng rng = Rng::stream(3, "weights");
    SimulatedOracle oracle(draw_weights(2, 2, rng));
    const Element x = make(0, 0, {0.5, 1.0});
    const Element y = make(1, 0, {2.0, -1.0});
    const double t = oracle.truth(x, y);
    CHECK(oracle.ledger().count() == 0);
    CHECK(oracle.query(x, y) == t);
    CHECK(oracle.query(y, x) == t);
    CHECK(oracle.ledger().count() == 1);
    const Element y2 = make(1, 1, {0.0, 0.0});
    oracle.query(x, y2);
    CHECK(oracle.ledger().count() == 2);
}

TEST_CASE("simulated answers satisfy both one-sided detour properties") {
    Rng wrng = Rng::stream(23, "weights");
    const OracleSpec spec = draw_weights(5, 2, wrng);
    SimulatedOracle oracle(spec);

    Rng drng = Rng::stream(23, "data");
    MixtureDistribution d0(0, make_mixture_group(5, 4, 2.0, drng));
    MixtureDistribution d1(1, make_mixture_group(5, 4, 2.0, drng));
    Rng trng = Rng::stream(23, "trials");
    const auto triples = make_property_triples(d0, d1, 2000, trng);

    const WeightedEuclideanMetric m0 = spec.intra_metric(0);
    const WeightedEuclideanMetric m1 = spec.intra_metric(1);
    const auto report = verify_cross_metric_properties(
        m0, m1,
        [&](const Element& a, const Element& b) { return oracle.truth(a, b); },
        triples, 1e-9);
    CHECK(report.checked == 2000);
    CHECK(report.violations == 0);
    CHECK(report.worst_slack >= -1e-9);
}

TEST_CASE("property checker flags a genuine violation") {
    WeightedEuclideanMetric zero({0.0});
    // Similarity ignores the zero intra metric, so moving the detour point
    // changes sigma without any distance to pay for it.
    auto sigma = [](const Element& a, const Element& b) {
        return std::abs(a.features[0] - b.features[0]);
    };
    std::vector<CrossTriple> triples;
    triples.push_back(CrossTriple{make(0, 0, {5.0}), make(0, 1, {0.0}), make(1, 0, {0.0})});
    const auto report = verify_cross_metric_properties(zero, zero, sigma, triples, 1e-9);
    CHECK(report.checked == 1);
    CHECK(report.violations == 1);
    CHECK(report.worst_slack == -5.0);
}

TEST_CASE("property checker validates its inputs") {
    WeightedEuclideanMetric m({1.0});
    auto sigma = [](const Element&, const Element&) { return 0.0; };
    std::vector<CrossTriple> same_group;
    same_group.push_back(
        CrossTriple{make(0, 0, {0.0}), make(0, 1, {0.0}), make(0, 2, {0.0})});
    CHECK_THROWS_AS(verify_cross_metric_properties(m, m, sigma, same_group, 1e-9),
                    UsageError);
    std::vector<CrossTriple> foreign_z;
    foreign_z.push_back(
        CrossTriple{make(0, 0, {0.0}), make(2, 0, {0.0}), make(1, 0, {0.0})});
    CHECK_THROWS_AS(verify_cross_metric_properties(m, m, sigma, foreign_z, 1e-9),
                    UsageError);
}

}  // TEST_SUITE("oracle")
