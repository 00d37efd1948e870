#pragma once

#include <cstdint>

#include "hcn/channel.hpp"
#include "hcn/game.hpp"
#include "hcn/partition.hpp"

namespace hcn {

/// Full mmWave communication: every pair in the mmWave band.
Partition fmc_partition(const Scenario& scenario);

/// Random communication: each pair uniform over all C + 1 coalitions.
Partition rc_partition(const Scenario& scenario, std::uint64_t seed);

/// Cellular coalition game: the switch engine restricted to cellular
/// coalitions, started from a uniform cellular assignment drawn with
/// `init_seed`. Throws std::invalid_argument when C = 0.
SwitchTrace ccg_partition(const ChannelModel& model, FormationConfig config, std::uint64_t init_seed);

/// Full cellular communication: each pair uniform over the C cellular
/// coalitions. Throws std::invalid_argument when C = 0.
Partition fcc_partition(const Scenario& scenario, std::uint64_t seed);

struct OptimalSolution {
    Partition partition;
    double sum_rate = 0.0;
    std::uint64_t evaluations = 0;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Number of assignments the exhaustive search visits, (options)^D,
/// saturated at UINT64_MAX. `required` receives the unsaturated value.
std::uint64_t enumeration_size(std::size_t num_cellular, std::size_t num_d2d, StrategySpace space,
                               double* required = nullptr);

/// Enumerates every assignment and returns a maximizer of the system sum
/// rate; ties go to the lexicographically smallest assignment vector.
/// Throws BudgetExceeded before doing any work if the count exceeds `budget`.
/// `threads` splits the enumeration without changing the result.
OptimalSolution exhaustive_optimal(const ChannelModel& model,
                                   std::uint64_t budget = kDefaultEnumerationBudget,
                                   StrategySpace space = StrategySpace::Full,
                                   unsigned threads = 1);

}  // namespace hcn
