#include "hcn/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hcn/errors.hpp"
#include "hcn/random.hpp"
#include "hcn/rate.hpp"

namespace hcn {

Partition fmc_partition(const Scenario& scenario)
{
    return Partition::uniform(scenario.num_cellular(), scenario.num_d2d(), scenario.num_cellular());
}

Partition rc_partition(const Scenario& scenario, std::uint64_t seed)
{
    return random_partition(scenario.num_cellular(), scenario.num_d2d(), seed, StrategySpace::Full);
}

Partition fcc_partition(const Scenario& scenario, std::uint64_t seed)
{
    if (scenario.num_cellular() == 0) {
        throw std::invalid_argument("full cellular communication needs at least one cellular user");
    }
    return random_partition(scenario.num_cellular(), scenario.num_d2d(), seed, StrategySpace::CellularOnly);
}

SwitchTrace ccg_partition(const ChannelModel& model, FormationConfig config, std::uint64_t init_seed)
{
    if (model.num_cellular() == 0) {
        throw std::invalid_argument("cellular coalition game needs at least one cellular user");
    }
    config.strategy_space = StrategySpace::CellularOnly;
    const Partition initial =
        random_partition(model.num_cellular(), model.num_d2d(), init_seed, StrategySpace::CellularOnly);
    return form_coalitions(model, initial, config);
}

std::uint64_t enumeration_size(std::size_t num_cellular, std::size_t num_d2d, StrategySpace space,
                               double* required)
{
    const std::uint64_t options = space == StrategySpace::Full ? num_cellular + 1 : num_cellular;
    if (required) {
        *required = std::pow(static_cast<double>(options), static_cast<double>(num_d2d));
    }
    std::uint64_t count = 1;
    for (std::size_t d = 0; d < num_d2d; ++d) {
        if (options != 0 && count > std::numeric_limits<std::uint64_t>::max() / options) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        count *= options;
    }
    return count;
}

namespace {

struct Best {
    double value = -std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
    bool found = false;
};

// Visits assignments [first, last) in mixed-radix order with pair 0 as the
// most significant digit, so index order is lexicographic order.
Best search_range(const ChannelModel& model, const std::vector<std::size_t>& allowed,
                  std::uint64_t first, std::uint64_t last)
{
    const std::size_t nd = model.num_d2d();
    const std::size_t radix = allowed.size();
    const std::size_t nc = model.num_cellular();

    std::vector<std::size_t> digits(nd, 0);
    std::uint64_t rest = first;
    for (std::size_t k = nd; k-- > 0;) {
        digits[k] = rest % radix;
        rest /= radix;
    }

    std::vector<std::vector<std::size_t>> members(nc + 1);
    Best best;
    for (std::uint64_t index = first; index < last; ++index) {
        for (auto& m : members) m.clear();
        for (std::size_t d = 0; d < nd; ++d) {
            members[allowed[digits[d]]].push_back(d);
        }
        double total = 0.0;
        for (std::size_t c = 0; c <= nc; ++c) {
            if (c < nc || radix == nc + 1) {
                total += detail::coalition_value_unchecked(c, members[c], model);
            }
        }
        if (!best.found || total > best.value) {
            best = {total, index, true};
        }
        for (std::size_t k = nd; k-- > 0;) {
            if (++digits[k] < radix) break;
            digits[k] = 0;
        }
    }
    return best;
}

}  // namespace

OptimalSolution exhaustive_optimal(const ChannelModel& model, std::uint64_t budget, StrategySpace space,
                                   unsigned threads)
{
    const std::size_t nd = model.num_d2d();
    const std::size_t nc = model.num_cellular();
    double required = 0.0;
    const std::uint64_t count = enumeration_size(nc, nd, space, &required);
    if (required > static_cast<double>(budget) || count > budget) {
        throw BudgetExceeded(required, budget);
    }
    const auto allowed = allowed_coalitions(nc, space);
    if (allowed.empty()) {
        throw std::invalid_argument("strategy space has no coalitions");
    }

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(
                                                                          std::min<std::uint64_t>(count, 64))));
    std::vector<Best> partial(workers);
    if (workers == 1) {
        partial[0] = search_range(model, allowed, 0, count);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t first = count / workers * w + std::min<std::uint64_t>(w, count % workers);
            const std::uint64_t size = count / workers + (w < count % workers ? 1 : 0);
            pool.emplace_back([&, w, first, size] { partial[w] = search_range(model, allowed, first, first + size); });
        }
        for (auto& t : pool) t.join();
    }

    // Ranges are ordered, so a strict comparison keeps the earliest maximizer.
    Best best;
    for (const Best& b : partial) {
        if (b.found && (!best.found || b.value > best.value)) {
            best = b;
        }
    }

    std::vector<std::size_t> assignment(nd);
    std::uint64_t rest = best.index;
    for (std::size_t k = nd; k-- > 0;) {
        assignment[k] = allowed[rest % allowed.size()];
        rest /= allowed.size();
    }
    return {Partition(nc, std::move(assignment)), best.value, count};
}

}  // namespace hcn
