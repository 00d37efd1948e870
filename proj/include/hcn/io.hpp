#pragma once

#include <string>

#include <json.hpp>

#include "hcn/harness.hpp"
#include "hcn/rate.hpp"
#include "hcn/scenario.hpp"

// JSON documents for replay fixtures, configs and results. Points are [x, y]
// arrays in meters. Readers throw ConfigError on malformed input.
namespace hcn {

using json = nlohmann::ordered_json;

json to_json(const SystemParams& params);
SystemParams params_from_json(const json& doc, const SystemParams& defaults = {});

json to_json(const Scenario& scenario);
Scenario scenario_from_json(const json& doc);

json to_json(const Partition& partition);
Partition partition_from_json(const json& doc);

json to_json(const RateReport& report);
RateReport rate_report_from_json(const json& doc);

json to_json(const SwitchTrace& trace);

json to_json(const FormationConfig& config);
FormationConfig formation_from_json(const json& doc, const FormationConfig& defaults = {});

json to_json(const SweepSpec& spec);
SweepSpec sweep_spec_from_json(const json& doc);

/// Metadata document: the spec, the full parameters of every point, trial
/// seeds, summaries and per-trial records.
json to_json(const SweepResult& result);

/// Stable text form used for every file the tools write.
std::string dump(const json& doc);

/// Shortest round-trip decimal, '.' separator, independent of locale.
std::string format_double(double value);

}  // namespace hcn
