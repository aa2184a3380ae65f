#include "simlearn/io/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "simlearn/core/errors.hpp"

namespace simlearn {

namespace {

json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

std::vector<std::vector<double>> metric_weights(
    const std::vector<std::shared_ptr<const Metric>>& metrics) {
    std::vector<std::vector<double>> out;
    out.reserve(metrics.size());
    for (const auto& m : metrics) {
        const auto* weighted = dynamic_cast<const WeightedEuclideanMetric*>(m.get());
        if (!weighted)
            throw UsageError("to_json: only weighted Euclidean metrics serialize");
        out.push_back(weighted->weights());
    }
    return out;
}

json samples_to_json(const std::vector<GroupSample>& samples) {
    json arr = json::array();
    for (const auto& s : samples) {
        json features = json::array();
        for (const auto& e : s.elements) features.push_back(e.features);
        arr.push_back(json{{"group", s.group}, {"features", std::move(features)}});
    }
    return arr;
}

std::vector<GroupSample> samples_from_json(const json& arr) {
    std::vector<GroupSample> out;
    for (const auto& js : arr) {
        GroupSample s;
        s.group = js.at("group").get<int>();
        std::int64_t i = 0;
        for (const auto& f : js.at("features"))
            s.elements.push_back(Element{s.group, i++, f.get<std::vector<double>>()});
        s.validate();
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<std::shared_ptr<const Metric>> metrics_from_json(const json& arr) {
    std::vector<std::shared_ptr<const Metric>> out;
    for (const auto& w : arr)
        out.push_back(
            std::make_shared<WeightedEuclideanMetric>(w.get<std::vector<double>>()));
    return out;
}

json tables_to_json(const CrossTables& tables) {
    json arr = json::array();
    for (const auto& [pair, table] : tables) {
        arr.push_back(json{{"lo", pair.first},
                           {"hi", pair.second},
                           {"rows", table.rows},
                           {"cols", table.cols},
                           {"values", table.values}});
    }
    return arr;
}

CrossTables tables_from_json(const json& arr) {
    CrossTables out;
    for (const auto& jt : arr) {
        PairTable table;
        table.rows = jt.at("rows").get<std::int64_t>();
        table.cols = jt.at("cols").get<std::int64_t>();
        table.values = jt.at("values").get<std::vector<double>>();
        if (static_cast<std::int64_t>(table.values.size()) != table.rows * table.cols)
            throw DataError("tables_from_json: value count does not match shape");
        out.emplace(GroupPair{jt.at("lo").get<int>(), jt.at("hi").get<int>()},
                    std::move(table));
    }
    return out;
}

}  // namespace

json to_json(const OracleSpec& spec) {
    json beta = json::array();
    for (const auto& [pair, weights] : spec.beta)
        beta.push_back(
            json{{"lo", pair.first}, {"hi", pair.second}, {"weights", weights}});
    return json{{"alpha", spec.alpha}, {"beta", std::move(beta)}};
}

OracleSpec oracle_spec_from_json(const json& j) {
    OracleSpec spec;
    spec.alpha = j.at("alpha").get<std::vector<std::vector<double>>>();
    for (const auto& jb : j.at("beta"))
        spec.beta.emplace(GroupPair{jb.at("lo").get<int>(), jb.at("hi").get<int>()},
                          jb.at("weights").get<std::vector<double>>());
    spec.validate();
    return spec;
}

json to_json(const MixtureSpec& spec) {
    json comps = json::array();
    for (const auto& c : spec.components)
        comps.push_back(json{{"mean", c.mean}, {"variances", c.variances}});
    return json{{"components", std::move(comps)}, {"weights", spec.weights}};
}

MixtureSpec mixture_spec_from_json(const json& j) {
    MixtureSpec spec;
    for (const auto& jc : j.at("components"))
        spec.components.push_back(
            GaussianComponent{jc.at("mean").get<std::vector<double>>(),
                              jc.at("variances").get<std::vector<double>>()});
    spec.weights = j.at("weights").get<std::vector<double>>();
    spec.validate();
    return spec;
}

json to_json(const TableSchema& schema) {
    json cols = json::array();
    for (const auto& c : schema.columns)
        cols.push_back(json{
            {"name", c.name},
            {"kind", c.kind == ColumnKind::kNumeric ? "numeric" : "categorical"}});
    return json{{"columns", std::move(cols)}};
}

TableSchema table_schema_from_json(const json& j) {
    TableSchema schema;
    for (const auto& jc : j.at("columns")) {
        const std::string kind = jc.at("kind").get<std::string>();
        if (kind != "numeric" && kind != "categorical")
            throw DataError("table_schema_from_json: unknown column kind '" + kind + "'");
        schema.columns.push_back(ColumnSchema{
            jc.at("name").get<std::string>(),
            kind == "numeric" ? ColumnKind::kNumeric : ColumnKind::kCategorical});
    }
    if (schema.columns.empty())
        throw DataError("table_schema_from_json: schema has no columns");
    return schema;
}

json to_json(const Histogram& hist) {
    std::vector<double> lefts(hist.edges.begin(), hist.edges.end() - 1);
    return json{
        {"left_edges", lefts}, {"counts", hist.counts}, {"excluded", hist.excluded}};
}

Histogram histogram_from_json(const json& j) {
    Histogram hist;
    hist.edges = j.at("left_edges").get<std::vector<double>>();
    hist.edges.push_back(std::numeric_limits<double>::infinity());
    hist.counts = j.at("counts").get<std::vector<std::int64_t>>();
    hist.excluded = j.at("excluded").get<std::int64_t>();
    if (hist.counts.size() + 1 != hist.edges.size())
        throw DataError("histogram_from_json: counts do not match edges");
    return hist;
}

json to_json(const StatBlock& block) {
    return json{{"count", block.count},     {"excluded", block.excluded},
                {"mean", number_or_null(block.mean)},
                {"median", number_or_null(block.median)},
                {"p90", number_or_null(block.p90)},
                {"p99", number_or_null(block.p99)},
                {"max", number_or_null(block.max)},
                {"histogram", to_json(block.hist)}};
}

json to_json(const ErrorSummary& summary) {
    json out;
    if (summary.simple) {
        out["simple"] = json{{"rel_err_pct", to_json(summary.simple->rel_err_pct)},
                             {"abs_over_eps", to_json(summary.simple->abs_over_eps)}};
    } else {
        out["simple"] = nullptr;
    }
    if (summary.queryopt) {
        out["queryopt"] = json{{"rel_err_pct", to_json(summary.queryopt->rel_err_pct)},
                               {"abs_over_eps", to_json(summary.queryopt->abs_over_eps)}};
    } else {
        out["queryopt"] = nullptr;
    }
    return out;
}

json to_json(const SimpleModel& model) {
    if (model.mode != QueryMode::kEager)
        throw UsageError("to_json: lazy models do not serialize");
    return json{{"kind", "simple"},
                {"samples", samples_to_json(model.samples)},
                {"metric_weights", metric_weights(model.metrics)},
                {"sigma", tables_to_json(model.sigma)}};
}

SimpleModel simple_model_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "simple")
        throw DataError("simple_model_from_json: wrong kind");
    SimpleModel model;
    model.samples = samples_from_json(j.at("samples"));
    model.metrics = metrics_from_json(j.at("metric_weights"));
    model.sigma = tables_from_json(j.at("sigma"));
    model.mode = QueryMode::kEager;
    model.oracle = nullptr;
    return model;
}

json to_json(const RepModel& model) {
    if (model.mode != QueryMode::kEager)
        throw UsageError("to_json: lazy models do not serialize");
    json selections = json::array();
    for (const auto& sel : model.selections)
        selections.push_back(json{{"representatives", sel.representatives},
                                  {"assignment", sel.assignment}});
    return json{{"kind", "queryopt"},
                {"samples", samples_to_json(model.samples)},
                {"metric_weights", metric_weights(model.metrics)},
                {"selections", std::move(selections)},
                {"params",
                 json{{"epsilon", model.params.epsilon},
                      {"delta", model.params.delta},
                      {"gamma", model.params.gamma},
                      {"rho", model.params.rho}}},
                {"sigma", tables_to_json(model.sigma)}};
}

RepModel rep_model_from_json(const json& j) {
    if (j.at("kind").get<std::string>() != "queryopt")
        throw DataError("rep_model_from_json: wrong kind");
    RepModel model;
    model.samples = samples_from_json(j.at("samples"));
    model.metrics = metrics_from_json(j.at("metric_weights"));
    for (const auto& js : j.at("selections"))
        model.selections.push_back(
            RepSelection{js.at("representatives").get<std::vector<std::int64_t>>(),
                         js.at("assignment").get<std::vector<std::int64_t>>()});
    const auto& jp = j.at("params");
    model.params.epsilon = jp.at("epsilon").get<double>();
    model.params.delta = jp.at("delta").get<double>();
    model.params.gamma = jp.at("gamma").get<int>();
    model.params.rho = jp.at("rho").get<double>();
    model.sigma = tables_from_json(j.at("sigma"));
    model.mode = QueryMode::kEager;
    model.oracle = nullptr;
    model.rep_position.resize(model.samples.size());
    for (std::size_t g = 0; g < model.selections.size(); ++g) {
        const auto& sel = model.selections[g];
        for (std::size_t p = 0; p < sel.representatives.size(); ++p)
            model.rep_position[g].emplace(sel.representatives[p],
                                          static_cast<std::int64_t>(p));
    }
    return model;
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("save_json: cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw DataError("save_json: write to '" + path + "' failed");
}

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("load_json: cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError("load_json: '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace simlearn
