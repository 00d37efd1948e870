// hcnsim: single runs, parameter sweeps, the exhaustive oracle and a
// self-check over random instances.
//
// Exit codes: 0 success, 1 bad arguments or configuration, 2 refused or
// failed at run time (e.g. the oracle budget), 3 a validation check failed.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hcn/baselines.hpp"
#include "hcn/channel.hpp"
#include "hcn/errors.hpp"
#include "hcn/game.hpp"
#include "hcn/harness.hpp"
#include "hcn/io.hpp"
#include "hcn/random.hpp"
#include "hcn/rate.hpp"
#include "hcn/scenario.hpp"

namespace fs = std::filesystem;
using namespace hcn;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitValidation = 3;

json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("malformed config '" + path + "': " + e.what());
    }
}

void write_file(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

struct RunArgs {
    std::string config;
    std::optional<std::size_t> cellular;
    std::optional<std::size_t> d2d;
    std::string scheme = "cg";
    std::string initial = "UniformRandom";
    std::uint64_t seed = 1;
    std::string out;
};

int cmd_run(const RunArgs& a)
{
    SystemParams params;
    FormationConfig formation;
    if (!a.config.empty()) {
        json doc = read_json_file(a.config);
        if (doc.is_object() && doc.contains("formation")) {
            formation = formation_from_json(doc.at("formation"));
            doc.erase("formation");
        }
        params = params_from_json(doc);
    }
    if (a.cellular) params.num_cellular = *a.cellular;
    if (a.d2d) params.num_d2d = *a.d2d;
    Scheme scheme;
    InitialPartition initial;
    try {
        scheme = parse_scheme(a.scheme);
        initial = parse_initial_partition(a.initial);
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const TrialSeeds seeds = TrialSeeds::derive(a.seed);
    params.rng_seed = seeds.scenario;
    const Scenario scenario = generate_scenario(params);
    const ChannelModel model(scenario, params);
    const SchemeOutcome outcome = run_scheme(scheme, scenario, model, seeds, formation, kDefaultEnumerationBudget, initial);

    json doc{{"scheme", std::string(to_string(scheme))},
             {"seed", a.seed},
             {"params", to_json(params)},
             {"scenario", to_json(scenario)},
             {"partition", to_json(outcome.partition)},
             {"rates", to_json(system_sum_rate(outcome.partition, model))}};
    if (outcome.initial_sum_rate) doc["initial_sum_rate"] = *outcome.initial_sum_rate;
    if (outcome.trace) doc["trace"] = to_json(*outcome.trace);
    emit(dump(doc), a.out);
    return 0;
}

struct SweepArgs {
    std::string config;
    std::string out = "results";
    unsigned threads = 1;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> timestamp;
    bool traces = false;
    bool quiet = false;
};

int cmd_sweep(const SweepArgs& a)
{
    SweepSpec spec = sweep_spec_from_json(read_json_file(a.config));
    if (a.trials) spec.trials_per_point = *a.trials;
    if (a.seed) spec.seed = *a.seed;
    if (a.timestamp) spec.timestamp = *a.timestamp;
    try {
        spec.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    const SweepResult result = run_sweep(spec, {a.threads, a.traces});

    const fs::path dir = fs::path(a.out) / spec.name;
    fs::create_directories(dir);
    write_file(dir / "results.csv", to_csv(result));
    write_file(dir / "meta.json", dump(to_json(result)));
    if (a.traces) {
        const fs::path tdir = dir / "traces";
        fs::create_directories(tdir);
        for (const TrialRecord& r : result.records) {
            if (!r.trace) continue;
            const std::string file = "point" + std::to_string(r.point) + "_trial" + std::to_string(r.trial) + "_" +
                                     std::string(to_string(r.scheme)) + ".json";
            write_file(tdir / file, dump(to_json(*r.trace)));
        }
    }

    if (!a.quiet) {
        std::cout << "sweep " << spec.name << ": " << spec.num_points() << " points x " << spec.trials_per_point
                  << " trials -> " << dir.string() << "\n";
        for (const SchemeSummary& s : result.summaries) {
            std::cout << "  " << to_string(spec.swept_parameter) << "=" << format_double(s.param_value) << "  "
                      << to_string(s.scheme) << "  mean " << format_double(s.mean_rate_bps) << " bit/s";
            if (s.mean_switches) std::cout << "  switches " << format_double(*s.mean_switches);
            std::cout << "\n";
        }
    }
    return 0;
}

struct OracleArgs {
    std::size_t cellular = 1;
    std::size_t d2d = 1;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultEnumerationBudget;
    unsigned threads = 1;
    std::string out;
};

int cmd_oracle(const OracleArgs& a)
{
    SystemParams params;
    params.num_cellular = a.cellular;
    params.num_d2d = a.d2d;
    params.rng_seed = TrialSeeds::derive(a.seed).scenario;
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    // refuse before building anything
    double required = 0;
    if (enumeration_size(a.cellular, a.d2d, StrategySpace::Full, &required) > a.budget) {
        throw BudgetExceeded(required, a.budget);
    }
    const Scenario scenario = generate_scenario(params);
    const ChannelModel model(scenario, params);
    const OptimalSolution best = exhaustive_optimal(model, a.budget, StrategySpace::Full, a.threads);
    json doc{{"seed", a.seed},
             {"params", to_json(params)},
             {"evaluations", best.evaluations},
             {"sum_rate", best.sum_rate},
             {"partition", to_json(best.partition)}};
    emit(dump(doc), a.out);
    return 0;
}

struct ValidateArgs {
    std::size_t instances = 200;
    std::uint64_t seed = 1;
};

// Formation on random instances: Nash stability, convergence by the stop
// rule, strictly increasing utility along the trace, and no loss against the
// starting partition.
int cmd_validate(const ValidateArgs& a)
{
    std::size_t unstable = 0, capped = 0, non_increasing = 0, worse = 0;
    for (std::size_t i = 0; i < a.instances; ++i) {
        const std::uint64_t s = derive_seed(a.seed, {i});
        Rng rng(s);
        SystemParams params;
        params.num_cellular = 1 + rng.index(8);
        params.num_d2d = 5 + rng.index(26);
        params.rng_seed = rng.next();
        const Scenario scenario = generate_scenario(params);
        const ChannelModel model(scenario, params);
        const Partition initial = random_partition(params.num_cellular, params.num_d2d, rng.next());
        FormationConfig config;
        config.rng_seed = rng.next();
        const SwitchTrace trace = form_coalitions(model, initial, config);

        if (!is_nash_stable(trace.final_partition, model).stable) ++unstable;
        if (trace.termination != Termination::Converged) ++capped;
        Partition cur = initial;
        double value = system_sum_rate(cur, model).system_sum_rate;
        const double start = value;
        bool increasing = true;
        for (const SwitchRecord& r : trace.switches) {
            cur = apply_switch(cur, r.d2d, r.to);
            const double next = system_sum_rate(cur, model).system_sum_rate;
            if (!(next > value)) increasing = false;
            value = next;
        }
        if (!increasing) ++non_increasing;
        if (value < start) ++worse;
    }

    auto line = [&](const char* what, std::size_t failures) {
        std::cout << (failures == 0 ? "PASS" : "FAIL") << "  " << what << " (" << failures << "/" << a.instances
                  << " failing)\n";
    };
    line("final partition is Nash-stable", unstable);
    line("terminated by the stop rule", capped);
    line("utility strictly increases at every switch", non_increasing);
    line("final utility not below the initial partition", worse);
    return unstable + capped + non_increasing + worse == 0 ? 0 : kExitValidation;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Coalition-formation simulator for D2D pairs sharing cellular uplinks and a mmWave band"};
    app.require_subcommand(1);

    RunArgs run;
    auto* run_cmd = app.add_subcommand("run", "Simulate one scheme on one scenario");
    run_cmd->add_option("--config", run.config, "JSON file of system parameters");
    run_cmd->add_option("--cellular", run.cellular, "Number of cellular users");
    run_cmd->add_option("--d2d", run.d2d, "Number of D2D pairs");
    run_cmd->add_option("--scheme", run.scheme, "cg, fmc, rc, ccg, fcc or os");
    run_cmd->add_option("--initial", run.initial, "CG start: UniformRandom or AllMmwave");
    run_cmd->add_option("--seed", run.seed, "Seed of the scenario and every random choice");
    run_cmd->add_option("--out", run.out, "Write the report here instead of stdout");

    SweepArgs sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep from a JSON spec");
    sweep_cmd->add_option("--config", sweep.config, "Sweep spec (JSON)")->required();
    sweep_cmd->add_option("--out", sweep.out, "Output root directory");
    sweep_cmd->add_option("--threads", sweep.threads, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--trials", sweep.trials, "Override trials per point");
    sweep_cmd->add_option("--seed", sweep.seed, "Override the sweep seed");
    sweep_cmd->add_option("--timestamp", sweep.timestamp, "Label stored in the metadata");
    sweep_cmd->add_flag("--traces", sweep.traces, "Write one switch trace per game run");
    sweep_cmd->add_flag("--quiet", sweep.quiet, "No summary on stdout");

    OracleArgs oracle;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive optimum of a small instance");
    oracle_cmd->add_option("--cellular", oracle.cellular, "Number of cellular users");
    oracle_cmd->add_option("--d2d", oracle.d2d, "Number of D2D pairs");
    oracle_cmd->add_option("--seed", oracle.seed, "Scenario seed");
    oracle_cmd->add_option("--budget", oracle.budget, "Maximum number of partitions to evaluate");
    oracle_cmd->add_option("--threads", oracle.threads, "Worker threads")->check(CLI::PositiveNumber);
    oracle_cmd->add_option("--out", oracle.out, "Write the result here instead of stdout");

    ValidateArgs validate;
    auto* validate_cmd = app.add_subcommand("validate", "Check formation invariants on random instances");
    validate_cmd->add_option("--instances", validate.instances, "Number of random instances");
    validate_cmd->add_option("--seed", validate.seed, "Base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*run_cmd) return cmd_run(run);
        if (*sweep_cmd) return cmd_sweep(sweep);
        if (*oracle_cmd) return cmd_oracle(oracle);
        if (*validate_cmd) return cmd_validate(validate);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const InvalidScenario& e) {
        std::cerr << "invalid scenario: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
