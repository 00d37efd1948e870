#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcn/baselines.hpp"
#include "hcn/game.hpp"
#include "hcn/params.hpp"

namespace hcn {

enum class Scheme { CG, FMC, RC, CCG, FCC, OS };

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);  // case-insensitive
bool is_game_scheme(Scheme scheme);

enum class SweepParameter {
    NumCellular,
    NumD2d,
    MmwaveTxPowerDbm,
    CellTxPowerDbm,
    BlockageBeta,
    HalfpowerBeamwidthDeg,
    D2dAxisOffsetMax,
    SideLength,
};

std::string_view to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(std::string_view name);

/// Writes `value` into the field of `params` named by `parameter`. Count
/// parameters must be non-negative integers.
void set_parameter(SystemParams& params, SweepParameter parameter, double value);

/// How trial seeds are derived.
///  - SharedAcrossPoints: trial t uses the same streams at every sweep point,
///    so points differ only by the swept parameter.
///  - PerPoint: streams depend on (point, trial).
enum class Seeding { SharedAcrossPoints, PerPoint };

std::string_view to_string(Seeding seeding);
Seeding parse_seeding(std::string_view name);

/// Starting partition of the CG scheme.
///  - UniformRandom: each pair uniform over all C + 1 coalitions.
///  - AllMmwave: every pair starts in the mmWave band.
enum class InitialPartition { UniformRandom, AllMmwave };

std::string_view to_string(InitialPartition initial);
InitialPartition parse_initial_partition(std::string_view name);

/// A second parameter moved in lockstep with the swept one.
struct CoupledSweep {
    SweepParameter parameter = SweepParameter::D2dAxisOffsetMax;
    std::vector<double> values;

    bool operator==(const CoupledSweep&) const = default;
};

struct SweepSpec {
    std::string name = "sweep";
    SweepParameter swept_parameter = SweepParameter::NumCellular;
    std::vector<double> values;
    std::optional<CoupledSweep> coupled;
    std::size_t trials_per_point = 20;
    std::vector<Scheme> schemes = {Scheme::CG, Scheme::FMC, Scheme::RC, Scheme::CCG, Scheme::FCC};
    SystemParams base_params;
    std::uint64_t seed = 1;
    Seeding seeding = Seeding::SharedAcrossPoints;
    InitialPartition cg_initial = InitialPartition::UniformRandom;
    FormationConfig formation;  // rng_seed and strategy_space are set per run
    std::uint64_t os_budget = kDefaultEnumerationBudget;
    std::string timestamp;  // caller-supplied, never read from the clock

    /// Throws std::invalid_argument or BudgetExceeded (OS over budget).
    void validate() const;

    std::size_t num_points() const { return values.size(); }
    /// base_params with the swept (and coupled) values of point `point` applied.
    SystemParams params_at(std::size_t point) const;

    bool operator==(const SweepSpec&) const = default;
};

/// Outcome of one scheme on one scenario.
struct SchemeOutcome {
    Scheme scheme = Scheme::CG;
    Partition partition;
    double sum_rate = 0.0;
    std::optional<SwitchTrace> trace;        // CG and CCG
    std::optional<double> initial_sum_rate;  // CG and CCG
};

/// Seeds of every random choice made for one trial.
struct TrialSeeds {
    std::uint64_t scenario = 0;
    std::uint64_t rc = 0;
    std::uint64_t fcc = 0;
    std::uint64_t cg_init = 0;
    std::uint64_t cg_order = 0;
    std::uint64_t ccg_init = 0;
    std::uint64_t ccg_order = 0;

    static TrialSeeds derive(std::uint64_t trial_seed);
};

SchemeOutcome run_scheme(Scheme scheme, const Scenario& scenario, const ChannelModel& model,
                         const TrialSeeds& seeds, const FormationConfig& formation,
                         std::uint64_t os_budget = kDefaultEnumerationBudget,
                         InitialPartition cg_initial = InitialPartition::UniformRandom);

struct TrialRecord {
    std::size_t point = 0;
    std::size_t trial = 0;
    std::uint64_t trial_seed = 0;
    Scheme scheme = Scheme::CG;
    double sum_rate = 0.0;
    std::optional<std::size_t> switches;
    std::optional<double> initial_sum_rate;
    std::optional<SwitchTrace> trace;  // kept only when requested
};

struct SchemeSummary {
    std::size_t point = 0;
    double param_value = 0.0;
    Scheme scheme = Scheme::CG;
    double mean_rate_bps = 0.0;
    double std_rate_bps = 0.0;
    std::size_t trials = 0;
    std::optional<double> mean_switches;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SchemeSummary> summaries;  // point-major, schemes in spec order
    std::vector<TrialRecord> records;      // point, trial, scheme order

    const SchemeSummary& summary(std::size_t point, Scheme scheme) const;
    /// Per-trial sum rates of one scheme at one point, in trial order.
    std::vector<double> rates(std::size_t point, Scheme scheme) const;
    /// Per-point mean rates of one scheme.
    std::vector<double> mean_rates(Scheme scheme) const;
};

struct SweepOptions {
    unsigned threads = 1;
    bool keep_traces = false;
};

/// Runs every scheme on the same freshly generated scenario per (point,
/// trial). The result does not depend on the worker count.
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

/// Trial seed of (point, trial) under the spec's seeding policy.
std::uint64_t trial_seed(const SweepSpec& spec, std::size_t point, std::size_t trial);

/// Mean relative shortfall of `cg_values` against `os_values`.
/// Throws std::invalid_argument on empty input, length mismatch or a
/// non-positive optimum.
double average_deviation(std::span<const double> os_values, std::span<const double> cg_values);

struct ConvergenceStats {
    double mean = 0.0;
    double std = 0.0;
    std::size_t max = 0;
};

/// Summary of switch counts. Throws std::invalid_argument on empty input.
ConvergenceStats convergence_stats(std::span<const SwitchTrace> traces);

/// CSV with header param_value,scheme,mean_rate_bps,std_rate_bps,trials,mean_switches.
/// mean_switches is empty for schemes that do not switch.
std::string to_csv(const SweepResult& result);

}  // namespace hcn
