#include <doctest.h>

#include <stdexcept>

#include "hcn/baselines.hpp"
#include "hcn/channel.hpp"
#include "hcn/game.hpp"
#include "hcn/rate.hpp"
#include "hcn/scenario.hpp"

using namespace hcn;

namespace {

struct Instance {
    SystemParams params;
    Scenario scenario;
    ChannelModel model;

    explicit Instance(const SystemParams& p) : params(p), scenario(generate_scenario(p)), model(scenario, p) {}
};

SystemParams params_of(std::size_t c, std::size_t d, std::uint64_t seed)
{
    SystemParams p;
    p.num_cellular = c;
    p.num_d2d = d;
    p.rng_seed = seed;
    return p;
}

FormationConfig config_with_seed(std::uint64_t seed)
{
    FormationConfig f;
    f.rng_seed = seed;
    return f;
}

}  // namespace

TEST_CASE("enum names round-trip")
{
    for (auto p : {OrderPolicy::FixedRoundRobin, OrderPolicy::RandomPermutationPerPass})
        CHECK(parse_order_policy(to_string(p)) == p);
    for (auto p : {CandidatePolicy::UniformDraw, CandidatePolicy::ShuffledCycle})
        CHECK(parse_candidate_policy(to_string(p)) == p);
    for (auto p : {StrategySpace::Full, StrategySpace::CellularOnly})
        CHECK(parse_strategy_space(to_string(p)) == p);
    CHECK_THROWS(parse_order_policy("sometimes"));
}

TEST_CASE("allowed coalitions")
{
    CHECK(allowed_coalitions(3, StrategySpace::Full) == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(allowed_coalitions(3, StrategySpace::CellularOnly) == std::vector<std::size_t>{0, 1, 2});
    CHECK(allowed_coalitions(0, StrategySpace::Full) == std::vector<std::size_t>{0});
}

TEST_CASE("mirror-symmetric uplinks leave a pair indifferent")
{
    Scenario s;
    s.side_length = 500;
    s.bs_position = {250, 250};
    s.cellular_positions = {{150, 300}, {350, 300}};
    s.d2d_tx_positions = {{250, 100}};
    s.d2d_rx_positions = {{250, 108}};
    SystemParams p = params_of(2, 1, 1);
    ChannelModel m(s, p);
    Partition part(2, {0});
    CHECK(switch_gain(part, 0, 1, m) == 0.0);

    FormationConfig f;
    f.strategy_space = StrategySpace::CellularOnly;
    SwitchTrace t = form_coalitions(m, part, f);
    CHECK(t.switch_count() == 0);
    CHECK(t.final_partition == part);
}

TEST_CASE("switch gain errors")
{
    Instance in(params_of(2, 3, 3));
    Partition part = Partition::uniform(2, 3, 2);
    CHECK_THROWS_AS(switch_gain(part, 0, 2, in.model), std::invalid_argument);
    CHECK_THROWS_AS(switch_gain(part, 3, 0, in.model), std::invalid_argument);
    CHECK_THROWS_AS(switch_gain(part, 0, 3, in.model), std::invalid_argument);
    CHECK_THROWS_AS(apply_switch(part, 1, 2), std::invalid_argument);
}

TEST_CASE("switch gain is the change of the system sum rate")
{
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Instance in(params_of(3, 8, seed));
        Partition part = random_partition(3, 8, seed * 7);
        const double before = system_sum_rate(part, in.model).system_sum_rate;
        for (std::size_t d = 0; d < 8; ++d) {
            for (std::size_t t = 0; t < 4; ++t) {
                if (t == part.coalition_of(d)) continue;
                const double after = system_sum_rate(apply_switch(part, d, t), in.model).system_sum_rate;
                CHECK(switch_gain(part, d, t, in.model) == doctest::Approx(after - before).epsilon(1e-9).scale(before));
            }
        }
    }
}

TEST_CASE("apply_switch is an involution")
{
    Partition part(2, {0, 1, 2, 2});
    Partition moved = apply_switch(part, 2, 0);
    CHECK(moved.coalition_of(2) == 0);
    CHECK(moved.members(0) == std::vector<std::size_t>{0, 2});
    CHECK(apply_switch(moved, 2, 2) == part);
}

TEST_CASE("a single pair with one uplink reaches the better of its two options")
{
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Instance in(params_of(1, 1, seed));
        OptimalSolution os = exhaustive_optimal(in.model);
        CHECK(os.evaluations == 2);
        for (std::size_t start = 0; start < 2; ++start) {
            SwitchTrace t = form_coalitions(in.model, Partition(1, {start}), config_with_seed(seed));
            CHECK(t.final_partition == os.partition);
            CHECK(t.switch_count() <= 1);
        }
    }
}

TEST_CASE("no pairs means nothing to do")
{
    Instance in(params_of(3, 0, 1));
    SwitchTrace t = form_coalitions(in.model, Partition(3, {}), {});
    CHECK(t.iterations == 0);
    CHECK(t.switch_count() == 0);
    CHECK(t.termination == Termination::Converged);
    CHECK(is_nash_stable(Partition(3, {}), in.model).stable);
}

TEST_CASE("formation output is Nash-stable and a fixed point")
{
    Instance in(params_of(5, 30, 17));
    Partition init = random_partition(5, 30, 5);
    SwitchTrace t = form_coalitions(in.model, init, config_with_seed(9));
    CHECK(t.termination == Termination::Converged);
    CHECK(is_nash_stable(t.final_partition, in.model).stable);

    SwitchTrace again = form_coalitions(in.model, t.final_partition, config_with_seed(9));
    CHECK(again.switch_count() == 0);
    CHECK(again.final_partition == t.final_partition);
    CHECK(again.iterations == 10 * 30);

    const double start = system_sum_rate(init, in.model).system_sum_rate;
    const double end = system_sum_rate(t.final_partition, in.model).system_sum_rate;
    CHECK(end >= start);
}

TEST_CASE("every recorded switch raises the utility and the counters add up")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const std::size_t c = 1 + seed % 8, d = 5 + seed % 26;
        Instance in(params_of(c, d, seed));
        SwitchTrace t = form_coalitions(in.model, random_partition(c, d, seed + 100), config_with_seed(seed));
        REQUIRE(t.termination == Termination::Converged);
        CHECK(t.coalition_evaluations == (c + 1) + 2 * t.iterations);

        Partition cur = t.initial_partition;
        double value = system_sum_rate(cur, in.model).system_sum_rate;
        for (const SwitchRecord& r : t.switches) {
            CHECK(r.gain > 0.0);
            CHECK(cur.coalition_of(r.d2d) == r.from);
            cur = apply_switch(cur, r.d2d, r.to);
            const double next = system_sum_rate(cur, in.model).system_sum_rate;
            CHECK(next > value);
            value = next;
        }
        CHECK(cur == t.final_partition);
        CHECK(is_nash_stable(t.final_partition, in.model).stable);
    }
}

TEST_CASE("formation is deterministic in its seed")
{
    Instance in(params_of(6, 20, 3));
    Partition init = random_partition(6, 20, 1);
    SwitchTrace a = form_coalitions(in.model, init, config_with_seed(4));
    SwitchTrace b = form_coalitions(in.model, init, config_with_seed(4));
    CHECK(a.switches == b.switches);
    CHECK(a.final_partition == b.final_partition);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("perturbing a stable partition yields a counterexample")
{
    Instance in(params_of(4, 12, 8));
    SwitchTrace t = form_coalitions(in.model, random_partition(4, 12, 2), config_with_seed(2));
    REQUIRE(is_nash_stable(t.final_partition, in.model).stable);

    bool found = false;
    for (std::size_t d = 0; d < 12 && !found; ++d) {
        for (std::size_t target = 0; target < 5 && !found; ++target) {
            const std::size_t from = t.final_partition.coalition_of(d);
            if (target == from) continue;
            const double g = switch_gain(t.final_partition, d, target, in.model);
            if (g >= 0.0) continue;
            found = true;
            Partition worse = apply_switch(t.final_partition, d, target);
            CHECK(switch_gain(worse, d, from, in.model) == doctest::Approx(-g).epsilon(1e-9));
            StabilityReport r = is_nash_stable(worse, in.model);
            CHECK_FALSE(r.stable);
            REQUIRE(r.counterexample.has_value());
            CHECK(r.counterexample->gain > 0.0);
            CHECK(switch_gain(worse, r.counterexample->d2d, r.counterexample->target, in.model) == r.counterexample->gain);
        }
    }
    CHECK(found);
}

TEST_CASE("other policies still converge")
{
    Instance in(params_of(3, 15, 21));
    for (auto order : {OrderPolicy::FixedRoundRobin, OrderPolicy::RandomPermutationPerPass}) {
        for (auto cand : {CandidatePolicy::UniformDraw, CandidatePolicy::ShuffledCycle}) {
            FormationConfig f;
            f.order_policy = order;
            f.candidate_policy = cand;
            f.rng_seed = 5;
            SwitchTrace t = form_coalitions(in.model, random_partition(3, 15, 6), f);
            CHECK(t.termination == Termination::Converged);
        }
    }
}

TEST_CASE("iteration cap is reported")
{
    Instance in(params_of(3, 15, 21));
    FormationConfig f;
    f.max_iterations_cap = 10 * 15;
    f.stop_factor = 10;
    SwitchTrace t = form_coalitions(in.model, random_partition(3, 15, 6), f);
    if (t.switch_count() > 0) CHECK(t.termination == Termination::IterationCap);
    f.max_iterations_cap = 10;
    CHECK_THROWS_AS(f.validate(15), std::invalid_argument);
}

TEST_CASE("cellular-only space keeps pairs off the mmWave band")
{
    Instance in(params_of(3, 10, 2));
    FormationConfig f;
    f.strategy_space = StrategySpace::CellularOnly;
    Partition init = random_partition(3, 10, 3, StrategySpace::CellularOnly);
    for (std::size_t c : init.assignment()) CHECK(c < 3);
    SwitchTrace t = form_coalitions(in.model, init, f);
    for (std::size_t c : t.final_partition.assignment()) CHECK(c < 3);
    CHECK(is_nash_stable(t.final_partition, in.model, StrategySpace::CellularOnly).stable);
    CHECK_THROWS_AS(form_coalitions(in.model, Partition::uniform(3, 10, 3), f), std::invalid_argument);
}
