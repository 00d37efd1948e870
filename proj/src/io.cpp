#include "hcn/io.hpp"

#include <charconv>
#include <set>
#include <stdexcept>
#include <string>

#include "hcn/errors.hpp"

namespace hcn {

std::string format_double(double value)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string dump(const json& doc)
{
    return doc.dump(2) + "\n";
}

namespace {

// Reading helpers: every failure surfaces as ConfigError naming the key.

void expect_object(const json& doc, const std::string& what)
{
    if (!doc.is_object()) {
        throw ConfigError(what + " must be a JSON object");
    }
}

void reject_unknown_keys(const json& doc, std::initializer_list<std::string_view> known, const std::string& what)
{
    std::set<std::string_view> allowed(known);
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) {
            throw ConfigError("unknown key '" + key + "' in " + what);
        }
    }
}

template <typename T>
void read(const json& doc, const char* key, T& target)
{
    auto it = doc.find(key);
    if (it == doc.end()) return;
    try {
        target = it->template get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
    }
}

template <typename T>
T require(const json& doc, const char* key)
{
    if (!doc.contains(key)) {
        throw ConfigError(std::string("missing key '") + key + "'");
    }
    T value{};
    read(doc, key, value);
    return value;
}

template <typename Enum, typename Parse>
void read_enum(const json& doc, const char* key, Enum& target, Parse parse)
{
    std::string name;
    if (!doc.contains(key)) return;
    read(doc, key, name);
    try {
        target = parse(name);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

json point_json(Point p) { return json::array({p.x, p.y}); }

Point point_from(const json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError("points must be [x, y] arrays of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json points_json(const std::vector<Point>& pts)
{
    json arr = json::array();
    for (Point p : pts) arr.push_back(point_json(p));
    return arr;
}

std::vector<Point> points_from(const json& doc, const char* key)
{
    std::vector<Point> out;
    if (!doc.contains(key)) return out;
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw ConfigError(std::string("'") + key + "' must be an array");
    for (const auto& p : arr) out.push_back(point_from(p));
    return out;
}

}  // namespace

json to_json(const SystemParams& p)
{
    return json{
        {"num_cellular", p.num_cellular},
        {"num_d2d", p.num_d2d},
        {"side_length", p.side_length},
        {"d2d_axis_offset_max", p.d2d_axis_offset_max},
        {"cell_bandwidth_hz", p.cell_bandwidth_hz},
        {"mmwave_bandwidth_hz", p.mmwave_bandwidth_hz},
        {"cell_noise_density", p.cell_noise_density},
        {"mmwave_noise_density", p.mmwave_noise_density},
        {"cell_tx_power_dbm", p.cell_tx_power_dbm},
        {"mmwave_tx_power_dbm", p.mmwave_tx_power_dbm},
        {"pathloss_exponent", p.pathloss_exponent},
        {"mui_factor", p.mui_factor},
        {"halfpower_beamwidth_deg", p.halfpower_beamwidth_deg},
        {"blockage_beta", p.blockage_beta},
        {"device_gain_dbi", p.device_gain_dbi},
        {"bs_gain_dbi", p.bs_gain_dbi},
        {"mmwave_wavelength_m", p.mmwave_wavelength_m},
        {"k0_multiplier", p.k0_multiplier},
        {"min_link_distance_m", p.min_link_distance_m},
        {"shadowing_sigma_db", p.shadowing_sigma_db},
        {"fading_mode", std::string(to_string(p.fading_mode))},
        {"rng_seed", p.rng_seed},
    };
}

SystemParams params_from_json(const json& doc, const SystemParams& defaults)
{
    expect_object(doc, "params");
    reject_unknown_keys(doc,
                        {"num_cellular", "num_d2d", "side_length", "d2d_axis_offset_max", "cell_bandwidth_hz",
                         "mmwave_bandwidth_hz", "cell_noise_density", "mmwave_noise_density",
                         "cell_tx_power_dbm", "mmwave_tx_power_dbm", "pathloss_exponent", "mui_factor",
                         "halfpower_beamwidth_deg", "blockage_beta", "device_gain_dbi", "bs_gain_dbi",
                         "mmwave_wavelength_m", "k0_multiplier", "min_link_distance_m", "shadowing_sigma_db",
                         "fading_mode", "rng_seed"},
                        "params");
    SystemParams p = defaults;
    read(doc, "num_cellular", p.num_cellular);
    read(doc, "num_d2d", p.num_d2d);
    read(doc, "side_length", p.side_length);
    read(doc, "d2d_axis_offset_max", p.d2d_axis_offset_max);
    read(doc, "cell_bandwidth_hz", p.cell_bandwidth_hz);
    read(doc, "mmwave_bandwidth_hz", p.mmwave_bandwidth_hz);
    read(doc, "cell_noise_density", p.cell_noise_density);
    read(doc, "mmwave_noise_density", p.mmwave_noise_density);
    read(doc, "cell_tx_power_dbm", p.cell_tx_power_dbm);
    read(doc, "mmwave_tx_power_dbm", p.mmwave_tx_power_dbm);
    read(doc, "pathloss_exponent", p.pathloss_exponent);
    read(doc, "mui_factor", p.mui_factor);
    read(doc, "halfpower_beamwidth_deg", p.halfpower_beamwidth_deg);
    read(doc, "blockage_beta", p.blockage_beta);
    read(doc, "device_gain_dbi", p.device_gain_dbi);
    read(doc, "bs_gain_dbi", p.bs_gain_dbi);
    read(doc, "mmwave_wavelength_m", p.mmwave_wavelength_m);
    read(doc, "k0_multiplier", p.k0_multiplier);
    read(doc, "min_link_distance_m", p.min_link_distance_m);
    read(doc, "shadowing_sigma_db", p.shadowing_sigma_db);
    read_enum(doc, "fading_mode", p.fading_mode, parse_fading_mode);
    read(doc, "rng_seed", p.rng_seed);
    return p;
}

json to_json(const Scenario& s)
{
    json doc{
        {"side_length", s.side_length},
        {"bs_position", point_json(s.bs_position)},
        {"cellular_positions", points_json(s.cellular_positions)},
        {"d2d_tx_positions", points_json(s.d2d_tx_positions)},
        {"d2d_rx_positions", points_json(s.d2d_rx_positions)},
    };
    if (s.channel_gains) {
        const auto& g = *s.channel_gains;
        doc["channel_gains"] = json{
            {"cell_to_bs", g.cell_to_bs},
            {"d2d_tx_to_bs", g.d2d_tx_to_bs},
            {"cell_to_d2d_rx", g.cell_to_d2d_rx},
            {"d2d_tx_to_d2d_rx", g.d2d_tx_to_d2d_rx},
        };
    }
    return doc;
}

Scenario scenario_from_json(const json& doc)
{
    expect_object(doc, "scenario");
    reject_unknown_keys(doc,
                        {"side_length", "bs_position", "cellular_positions", "d2d_tx_positions",
                         "d2d_rx_positions", "channel_gains"},
                        "scenario");
    Scenario s;
    s.side_length = require<double>(doc, "side_length");
    if (!doc.contains("bs_position")) throw ConfigError("missing key 'bs_position'");
    s.bs_position = point_from(doc.at("bs_position"));
    s.cellular_positions = points_from(doc, "cellular_positions");
    s.d2d_tx_positions = points_from(doc, "d2d_tx_positions");
    s.d2d_rx_positions = points_from(doc, "d2d_rx_positions");
    if (s.d2d_tx_positions.size() != s.d2d_rx_positions.size()) {
        throw ConfigError("d2d_tx_positions and d2d_rx_positions differ in length");
    }
    if (doc.contains("channel_gains")) {
        const json& g = doc.at("channel_gains");
        expect_object(g, "channel_gains");
        ChannelGains gains;
        read(g, "cell_to_bs", gains.cell_to_bs);
        read(g, "d2d_tx_to_bs", gains.d2d_tx_to_bs);
        read(g, "cell_to_d2d_rx", gains.cell_to_d2d_rx);
        read(g, "d2d_tx_to_d2d_rx", gains.d2d_tx_to_d2d_rx);
        s.channel_gains = std::move(gains);
    }
    return s;
}

json to_json(const Partition& partition)
{
    return json{{"num_cellular", partition.num_cellular()},
                {"mmwave_coalition", partition.mmwave_coalition()},
                {"assignment", partition.assignment()}};
}

Partition partition_from_json(const json& doc)
{
    expect_object(doc, "partition");
    reject_unknown_keys(doc, {"num_cellular", "mmwave_coalition", "assignment"}, "partition");
    const auto nc = require<std::size_t>(doc, "num_cellular");
    auto assignment = require<std::vector<std::size_t>>(doc, "assignment");
    try {
        return Partition(nc, std::move(assignment));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

json to_json(const RateReport& r)
{
    return json{{"per_cellular_rate", r.per_cellular_rate},
                {"per_d2d_rate", r.per_d2d_rate},
                {"per_coalition_value", r.per_coalition_value},
                {"system_sum_rate", r.system_sum_rate}};
}

RateReport rate_report_from_json(const json& doc)
{
    expect_object(doc, "rate report");
    reject_unknown_keys(doc, {"per_cellular_rate", "per_d2d_rate", "per_coalition_value", "system_sum_rate"},
                        "rate report");
    RateReport r;
    read(doc, "per_cellular_rate", r.per_cellular_rate);
    read(doc, "per_d2d_rate", r.per_d2d_rate);
    read(doc, "per_coalition_value", r.per_coalition_value);
    r.system_sum_rate = require<double>(doc, "system_sum_rate");
    return r;
}

json to_json(const SwitchTrace& trace)
{
    json switches = json::array();
    for (const auto& s : trace.switches) {
        switches.push_back(json{{"iteration", s.iteration},
                                {"d2d", s.d2d},
                                {"from", s.from},
                                {"to", s.to},
                                {"gain_bps", s.gain}});
    }
    return json{{"termination", std::string(to_string(trace.termination))},
                {"iterations", trace.iterations},
                {"coalition_evaluations", trace.coalition_evaluations},
                {"switch_count", trace.switch_count()},
                {"initial_partition", to_json(trace.initial_partition)},
                {"final_partition", to_json(trace.final_partition)},
                {"switches", std::move(switches)}};
}

json to_json(const FormationConfig& c)
{
    return json{{"order_policy", std::string(to_string(c.order_policy))},
                {"candidate_policy", std::string(to_string(c.candidate_policy))},
                {"stop_factor", c.stop_factor},
                {"max_iterations_cap", c.max_iterations_cap},
                {"rng_seed", c.rng_seed},
                {"strategy_space", std::string(to_string(c.strategy_space))}};
}

FormationConfig formation_from_json(const json& doc, const FormationConfig& defaults)
{
    expect_object(doc, "formation");
    reject_unknown_keys(doc,
                        {"order_policy", "candidate_policy", "stop_factor", "max_iterations_cap", "rng_seed",
                         "strategy_space"},
                        "formation");
    FormationConfig c = defaults;
    read_enum(doc, "order_policy", c.order_policy, parse_order_policy);
    read_enum(doc, "candidate_policy", c.candidate_policy, parse_candidate_policy);
    read(doc, "stop_factor", c.stop_factor);
    read(doc, "max_iterations_cap", c.max_iterations_cap);
    read(doc, "rng_seed", c.rng_seed);
    read_enum(doc, "strategy_space", c.strategy_space, parse_strategy_space);
    return c;
}

json to_json(const SweepSpec& spec)
{
    json schemes = json::array();
    for (Scheme s : spec.schemes) schemes.push_back(std::string(to_string(s)));
    json doc{
        {"name", spec.name},
        {"swept_parameter", std::string(to_string(spec.swept_parameter))},
        {"values", spec.values},
    };
    if (spec.coupled) {
        doc["coupled"] = json{{"parameter", std::string(to_string(spec.coupled->parameter))},
                              {"values", spec.coupled->values}};
    }
    doc["trials_per_point"] = spec.trials_per_point;
    doc["schemes"] = std::move(schemes);
    doc["seed"] = spec.seed;
    doc["seeding"] = std::string(to_string(spec.seeding));
    doc["cg_initial"] = std::string(to_string(spec.cg_initial));
    doc["os_budget"] = spec.os_budget;
    doc["timestamp"] = spec.timestamp;
    doc["formation"] = to_json(spec.formation);
    doc["base_params"] = to_json(spec.base_params);
    return doc;
}

SweepSpec sweep_spec_from_json(const json& doc)
{
    expect_object(doc, "sweep spec");
    reject_unknown_keys(doc,
                        {"name", "swept_parameter", "values", "coupled", "trials_per_point", "schemes", "seed",
                         "seeding", "cg_initial", "os_budget", "timestamp", "formation", "base_params"},
                        "sweep spec");
    SweepSpec spec;
    read(doc, "name", spec.name);
    if (!doc.contains("swept_parameter")) throw ConfigError("missing key 'swept_parameter'");
    read_enum(doc, "swept_parameter", spec.swept_parameter, parse_sweep_parameter);
    spec.values = require<std::vector<double>>(doc, "values");
    if (doc.contains("coupled")) {
        const json& c = doc.at("coupled");
        expect_object(c, "coupled");
        reject_unknown_keys(c, {"parameter", "values"}, "coupled");
        CoupledSweep coupled;
        if (!c.contains("parameter")) throw ConfigError("missing key 'parameter' in coupled");
        read_enum(c, "parameter", coupled.parameter, parse_sweep_parameter);
        coupled.values = require<std::vector<double>>(c, "values");
        spec.coupled = std::move(coupled);
    }
    read(doc, "trials_per_point", spec.trials_per_point);
    if (doc.contains("schemes")) {
        std::vector<std::string> names;
        read(doc, "schemes", names);
        spec.schemes.clear();
        for (const auto& n : names) {
            try {
                spec.schemes.push_back(parse_scheme(n));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        }
    }
    read(doc, "seed", spec.seed);
    read_enum(doc, "seeding", spec.seeding, parse_seeding);
    read_enum(doc, "cg_initial", spec.cg_initial, parse_initial_partition);
    read(doc, "os_budget", spec.os_budget);
    read(doc, "timestamp", spec.timestamp);
    if (doc.contains("formation")) spec.formation = formation_from_json(doc.at("formation"));
    if (doc.contains("base_params")) spec.base_params = params_from_json(doc.at("base_params"));
    return spec;
}

json to_json(const SweepResult& result)
{
    const SweepSpec& spec = result.spec;
    json points = json::array();
    for (std::size_t p = 0; p < spec.num_points(); ++p) {
        json seeds = json::array();
        for (std::size_t t = 0; t < spec.trials_per_point; ++t) seeds.push_back(trial_seed(spec, p, t));
        points.push_back(json{{"index", p},
                              {"param_value", spec.values[p]},
                              {"params", to_json(spec.params_at(p))},
                              {"trial_seeds", std::move(seeds)}});
    }
    json summaries = json::array();
    for (const auto& s : result.summaries) {
        json row{{"point", s.point},
                 {"param_value", s.param_value},
                 {"scheme", std::string(to_string(s.scheme))},
                 {"mean_rate_bps", s.mean_rate_bps},
                 {"std_rate_bps", s.std_rate_bps},
                 {"trials", s.trials}};
        if (s.mean_switches) row["mean_switches"] = *s.mean_switches;
        summaries.push_back(std::move(row));
    }
    json trials = json::array();
    for (const auto& r : result.records) {
        json row{{"point", r.point},
                 {"trial", r.trial},
                 {"trial_seed", r.trial_seed},
                 {"scheme", std::string(to_string(r.scheme))},
                 {"sum_rate_bps", r.sum_rate}};
        if (r.switches) row["switches"] = *r.switches;
        if (r.initial_sum_rate) row["initial_sum_rate_bps"] = *r.initial_sum_rate;
        trials.push_back(std::move(row));
    }
    return json{{"spec", to_json(spec)},
                {"points", std::move(points)},
                {"summaries", std::move(summaries)},
                {"trials", std::move(trials)}};
}

}  // namespace hcn
