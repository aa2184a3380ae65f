#pragma once

#include <json.hpp>

#include "simlearn/analysis/summary.hpp"
#include "simlearn/datagen/mixture.hpp"
#include "simlearn/ingest/csv.hpp"
#include "simlearn/learners/queryopt.hpp"
#include "simlearn/learners/simple.hpp"
#include "simlearn/oracle/weights.hpp"

namespace simlearn {

using json = nlohmann::ordered_json;

json to_json(const OracleSpec& spec);
OracleSpec oracle_spec_from_json(const json& j);

json to_json(const MixtureSpec& spec);
MixtureSpec mixture_spec_from_json(const json& j);

json to_json(const TableSchema& schema);
TableSchema table_schema_from_json(const json& j);

/// Histograms serialize with finite left edges only; the last bin is
/// understood to extend to infinity.
json to_json(const Histogram& hist);
Histogram histogram_from_json(const json& j);

json to_json(const StatBlock& block);
json to_json(const ErrorSummary& summary);

/// Models serialize in eager mode only: a lazy model is just a pointer to
/// its oracle, which has no file form. Loaded models carry no oracle.
json to_json(const SimpleModel& model);
SimpleModel simple_model_from_json(const json& j);

json to_json(const RepModel& model);
RepModel rep_model_from_json(const json& j);

void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);

}  // namespace simlearn
