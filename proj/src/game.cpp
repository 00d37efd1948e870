#include "hcn/game.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hcn/random.hpp"
#include "hcn/rate.hpp"

namespace hcn {

std::string_view to_string(OrderPolicy policy)
{
    switch (policy) {
    case OrderPolicy::FixedRoundRobin: return "FixedRoundRobin";
    case OrderPolicy::RandomPermutationPerPass: return "RandomPermutationPerPass";
    }
    throw std::invalid_argument("unknown order policy");
}

std::string_view to_string(CandidatePolicy policy)
{
    switch (policy) {
    case CandidatePolicy::UniformDraw: return "UniformDraw";
    case CandidatePolicy::ShuffledCycle: return "ShuffledCycle";
    }
    throw std::invalid_argument("unknown candidate policy");
}

std::string_view to_string(StrategySpace space)
{
    switch (space) {
    case StrategySpace::Full: return "Full";
    case StrategySpace::CellularOnly: return "CellularOnly";
    }
    throw std::invalid_argument("unknown strategy space");
}

std::string_view to_string(Termination termination)
{
    switch (termination) {
    case Termination::Converged: return "Converged";
    case Termination::IterationCap: return "IterationCap";
    }
    throw std::invalid_argument("unknown termination");
}

OrderPolicy parse_order_policy(std::string_view name)
{
    if (name == "FixedRoundRobin") return OrderPolicy::FixedRoundRobin;
    if (name == "RandomPermutationPerPass") return OrderPolicy::RandomPermutationPerPass;
    throw std::invalid_argument("unknown order policy '" + std::string(name) + "'");
}

CandidatePolicy parse_candidate_policy(std::string_view name)
{
    if (name == "UniformDraw") return CandidatePolicy::UniformDraw;
    if (name == "ShuffledCycle") return CandidatePolicy::ShuffledCycle;
    throw std::invalid_argument("unknown candidate policy '" + std::string(name) + "'");
}

StrategySpace parse_strategy_space(std::string_view name)
{
    if (name == "Full") return StrategySpace::Full;
    if (name == "CellularOnly") return StrategySpace::CellularOnly;
    throw std::invalid_argument("unknown strategy space '" + std::string(name) + "'");
}

void FormationConfig::validate(std::size_t num_d2d) const
{
    if (stop_factor < 1) {
        throw std::invalid_argument("stop_factor must be at least 1");
    }
    if (max_iterations_cap < stop_factor * num_d2d) {
        throw std::invalid_argument("max_iterations_cap must be at least stop_factor * D");
    }
}

std::vector<std::size_t> allowed_coalitions(std::size_t num_cellular, StrategySpace space)
{
    const std::size_t count = space == StrategySpace::Full ? num_cellular + 1 : num_cellular;
    std::vector<std::size_t> ids(count);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    return ids;
}

namespace {

void check_switch(const Partition& partition, std::size_t d, std::size_t target)
{
    if (d >= partition.num_d2d()) {
        throw std::invalid_argument("D2D index out of range");
    }
    if (target >= partition.num_coalitions()) {
        throw std::invalid_argument("target coalition out of range");
    }
    if (partition.coalition_of(d) == target) {
        throw std::invalid_argument("switch target equals the current coalition");
    }
}

std::vector<std::size_t> without(const std::vector<std::size_t>& members, std::size_t d)
{
    std::vector<std::size_t> out;
    out.reserve(members.size());
    for (std::size_t m : members) {
        if (m != d) out.push_back(m);
    }
    return out;
}

std::vector<std::size_t> with(const std::vector<std::size_t>& members, std::size_t d)
{
    std::vector<std::size_t> out;
    out.reserve(members.size() + 1);
    auto pos = std::lower_bound(members.begin(), members.end(), d);
    out.insert(out.end(), members.begin(), pos);
    out.push_back(d);
    out.insert(out.end(), pos, members.end());
    return out;
}

// Coalition member lists are always kept ascending, so a coalition value
// depends only on the set and the engine's cached values match fresh ones.
double gain_of(double current, double current_without, double target, double target_with)
{
    return (current_without + target_with) - (current + target);
}

}  // namespace

double switch_gain(const Partition& partition, std::size_t d, std::size_t target,
                   const ChannelModel& model)
{
    check_switch(partition, d, target);
    if (partition.num_cellular() != model.num_cellular() || partition.num_d2d() != model.num_d2d()) {
        throw std::invalid_argument("partition dimensions do not match the scenario");
    }
    const std::size_t from = partition.coalition_of(d);
    const auto source = partition.members(from);
    const auto destination = partition.members(target);
    using detail::coalition_value_unchecked;
    return gain_of(coalition_value_unchecked(from, source, model),
                   coalition_value_unchecked(from, without(source, d), model),
                   coalition_value_unchecked(target, destination, model),
                   coalition_value_unchecked(target, with(destination, d), model));
}

Partition apply_switch(const Partition& partition, std::size_t d, std::size_t target)
{
    check_switch(partition, d, target);
    return partition.with_assignment(d, target);
}

namespace {

// Picks the coalition a pair evaluates on its turn.
class CandidateSource {
public:
    CandidateSource(CandidatePolicy policy, std::vector<std::size_t> allowed, std::size_t num_d2d, Rng& rng)
        : policy_(policy), allowed_(std::move(allowed)), rng_(rng)
    {
        if (policy_ == CandidatePolicy::ShuffledCycle) {
            cycles_.assign(num_d2d, allowed_);
            cursor_.assign(num_d2d, 0);
            for (auto& cycle : cycles_) {
                rng_.shuffle(std::span<std::size_t>(cycle));
            }
        }
    }

    std::size_t next(std::size_t d, std::size_t current)
    {
        if (policy_ == CandidatePolicy::UniformDraw) {
            // Uniform over the allowed ids other than `current`.
            std::size_t k = rng_.index(allowed_.size() - 1);
            if (allowed_[k] >= current) {
                ++k;
            }
            return allowed_[k];
        }
        auto& cycle = cycles_[d];
        std::size_t& pos = cursor_[d];
        for (;;) {
            const std::size_t id = cycle[pos];
            pos = (pos + 1) % cycle.size();
            if (id != current) {
                return id;
            }
        }
    }

private:
    CandidatePolicy policy_;
    std::vector<std::size_t> allowed_;  // ascending
    Rng& rng_;
    std::vector<std::vector<std::size_t>> cycles_;
    std::vector<std::size_t> cursor_;
};

}  // namespace

SwitchTrace form_coalitions(const ChannelModel& model, const Partition& initial,
                            const FormationConfig& config)
{
    const std::size_t nd = model.num_d2d();
    const std::size_t nc = model.num_cellular();
    config.validate(nd);
    if (initial.num_cellular() != nc || initial.num_d2d() != nd) {
        throw std::invalid_argument("initial partition dimensions do not match the scenario");
    }
    const auto allowed = allowed_coalitions(nc, config.strategy_space);
    for (std::size_t c : initial.assignment()) {
        if (!std::binary_search(allowed.begin(), allowed.end(), c)) {
            throw std::invalid_argument("initial partition uses a coalition outside the strategy space");
        }
    }

    Rng rng(config.rng_seed);
    CandidateSource candidates(config.candidate_policy, allowed, nd, rng);

    SwitchTrace trace;
    trace.initial_partition = initial;

    std::vector<std::size_t> assignment = initial.assignment();
    auto members = initial.coalitions();
    std::vector<double> values(nc + 1, 0.0);
    for (std::size_t c : allowed) {
        values[c] = detail::coalition_value_unchecked(c, members[c], model);
        ++trace.coalition_evaluations;
    }

    std::vector<std::size_t> order(nd);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t order_pos = nd;

    const std::size_t stop_after = config.stop_factor * nd;
    std::size_t failures = 0;
    std::size_t iteration = 0;
    while (failures < stop_after) {
        if (iteration == config.max_iterations_cap) {
            trace.termination = Termination::IterationCap;
            break;
        }
        if (order_pos == nd) {
            order_pos = 0;
            if (config.order_policy == OrderPolicy::RandomPermutationPerPass) {
                rng.shuffle(std::span<std::size_t>(order));
            }
        }
        const std::size_t d = order[order_pos++];
        const std::size_t from = assignment[d];

        bool switched = false;
        if (allowed.size() > 1) {
            const std::size_t to = candidates.next(d, from);
            auto source = without(members[from], d);
            auto destination = with(members[to], d);
            const double from_without = detail::coalition_value_unchecked(from, source, model);
            const double to_with = detail::coalition_value_unchecked(to, destination, model);
            trace.coalition_evaluations += 2;

            const double gain = gain_of(values[from], from_without, values[to], to_with);
            if (gain > 0.0) {
                trace.switches.push_back({iteration, d, from, to, gain});
                assignment[d] = to;
                members[from] = std::move(source);
                members[to] = std::move(destination);
                values[from] = from_without;
                values[to] = to_with;
                switched = true;
            }
        }
        failures = switched ? 0 : failures + 1;
        ++iteration;
    }

    trace.iterations = iteration;
    trace.final_partition = Partition(nc, std::move(assignment));
    return trace;
}

StabilityReport is_nash_stable(const Partition& partition, const ChannelModel& model, StrategySpace space)
{
    if (partition.num_cellular() != model.num_cellular() || partition.num_d2d() != model.num_d2d()) {
        throw std::invalid_argument("partition dimensions do not match the scenario");
    }
    const auto allowed = allowed_coalitions(model.num_cellular(), space);
    for (std::size_t d = 0; d < partition.num_d2d(); ++d) {
        for (std::size_t target : allowed) {
            if (target == partition.coalition_of(d)) {
                continue;
            }
            const double gain = switch_gain(partition, d, target, model);
            if (gain > 0.0) {
                return {false, ProfitableDeviation{d, target, gain}};
            }
        }
    }
    return {};
}

Partition random_partition(std::size_t num_cellular, std::size_t num_d2d, std::uint64_t seed,
                           StrategySpace space)
{
    const auto allowed = allowed_coalitions(num_cellular, space);
    if (allowed.empty() && num_d2d > 0) {
        throw std::invalid_argument("strategy space has no coalitions");
    }
    Rng rng(seed);
    std::vector<std::size_t> assignment(num_d2d);
    for (auto& c : assignment) {
        c = allowed[rng.index(allowed.size())];
    }
    return Partition(num_cellular, std::move(assignment));
}

}  // namespace hcn
