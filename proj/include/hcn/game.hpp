#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hcn/channel.hpp"
#include "hcn/partition.hpp"

namespace hcn {

/// Order in which pairs get their turn to attempt a switch.
enum class OrderPolicy { FixedRoundRobin, RandomPermutationPerPass };

/// How a pair picks the coalition it evaluates on its turn.
///  - UniformDraw: an independent uniform draw over the other coalitions.
///  - ShuffledCycle: each pair walks a private random cyclic order of the
///    coalitions (skipping its own), so C consecutive turns of a pair in an
///    unchanged partition visit every alternative exactly once.
enum class CandidatePolicy { UniformDraw, ShuffledCycle };

/// Coalitions a pair may join.
enum class StrategySpace { Full, CellularOnly };

std::string_view to_string(OrderPolicy policy);
std::string_view to_string(CandidatePolicy policy);
std::string_view to_string(StrategySpace space);
OrderPolicy parse_order_policy(std::string_view name);
CandidatePolicy parse_candidate_policy(std::string_view name);
StrategySpace parse_strategy_space(std::string_view name);

struct FormationConfig {
    OrderPolicy order_policy = OrderPolicy::RandomPermutationPerPass;
    CandidatePolicy candidate_policy = CandidatePolicy::ShuffledCycle;
    std::size_t stop_factor = 10;  // stop after stop_factor * D failed attempts in a row
    std::size_t max_iterations_cap = 10'000'000;
    std::uint64_t rng_seed = 0;
    StrategySpace strategy_space = StrategySpace::Full;

    /// Throws std::invalid_argument unless stop_factor >= 1 and
    /// max_iterations_cap >= stop_factor * num_d2d.
    void validate(std::size_t num_d2d) const;

    bool operator==(const FormationConfig&) const = default;
};

struct SwitchRecord {
    std::size_t iteration = 0;
    std::size_t d2d = 0;
    std::size_t from = 0;
    std::size_t to = 0;
    double gain = 0.0;  // increase of the total utility, always > 0

    bool operator==(const SwitchRecord&) const = default;
};

enum class Termination {
    Converged,     // the consecutive-failure counter reached stop_factor * D
    IterationCap,  // safety cap fired first; indicates a livelock
};

std::string_view to_string(Termination termination);

struct SwitchTrace {
    std::vector<SwitchRecord> switches;
    Partition initial_partition;
    Partition final_partition;
    std::size_t iterations = 0;
    std::size_t coalition_evaluations = 0;
    Termination termination = Termination::Converged;

    std::size_t switch_count() const { return switches.size(); }
};

/// Coalition ids a pair may occupy under `space` for C cellular users.
std::vector<std::size_t> allowed_coalitions(std::size_t num_cellular, StrategySpace space);

/// Change of the total utility if pair d moves to `target`:
/// [R(cur \ d) + R(target + d)] - [R(cur) + R(target)].
/// Positive exactly when the utilitarian preference favors the move.
/// Throws std::invalid_argument when target is d's current coalition or an
/// index is out of range.
double switch_gain(const Partition& partition, std::size_t d, std::size_t target,
                   const ChannelModel& model);

/// Returns the partition after pair d moves to `target`. Same errors as switch_gain.
Partition apply_switch(const Partition& partition, std::size_t d, std::size_t target);

/// Switch-based coalition formation. Each turn one pair evaluates one other
/// coalition and moves iff the total utility strictly increases; the run ends
/// after stop_factor * D consecutive unsuccessful turns. Deterministic given
/// config.rng_seed.
SwitchTrace form_coalitions(const ChannelModel& model, const Partition& initial,
                            const FormationConfig& config);

struct ProfitableDeviation {
    std::size_t d2d = 0;
    std::size_t target = 0;
    double gain = 0.0;
};

struct StabilityReport {
    bool stable = true;
    std::optional<ProfitableDeviation> counterexample;
};

/// Exhaustive check that no pair gains by a unilateral switch within `space`.
StabilityReport is_nash_stable(const Partition& partition, const ChannelModel& model,
                               StrategySpace space = StrategySpace::Full);

/// Each pair uniform over the coalitions allowed in `space`.
Partition random_partition(std::size_t num_cellular, std::size_t num_d2d, std::uint64_t seed,
                           StrategySpace space = StrategySpace::Full);

}  // namespace hcn
