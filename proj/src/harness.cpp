#include "hcn/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "hcn/errors.hpp"
#include "hcn/io.hpp"
#include "hcn/random.hpp"
#include "hcn/rate.hpp"
#include "hcn/stats.hpp"

namespace hcn {

std::string_view to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::CG: return "CG";
    case Scheme::FMC: return "FMC";
    case Scheme::RC: return "RC";
    case Scheme::CCG: return "CCG";
    case Scheme::FCC: return "FCC";
    case Scheme::OS: return "OS";
    }
    throw std::invalid_argument("unknown scheme");
}

Scheme parse_scheme(std::string_view name)
{
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    for (Scheme s : {Scheme::CG, Scheme::FMC, Scheme::RC, Scheme::CCG, Scheme::FCC, Scheme::OS}) {
        if (upper == to_string(s)) return s;
    }
    throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

bool is_game_scheme(Scheme scheme)
{
    return scheme == Scheme::CG || scheme == Scheme::CCG;
}

namespace {

struct ParameterName {
    SweepParameter parameter;
    std::string_view name;
};

constexpr ParameterName kParameterNames[] = {
    {SweepParameter::NumCellular, "num_cellular"},
    {SweepParameter::NumD2d, "num_d2d"},
    {SweepParameter::MmwaveTxPowerDbm, "mmwave_tx_power_dbm"},
    {SweepParameter::CellTxPowerDbm, "cell_tx_power_dbm"},
    {SweepParameter::BlockageBeta, "blockage_beta"},
    {SweepParameter::HalfpowerBeamwidthDeg, "halfpower_beamwidth_deg"},
    {SweepParameter::D2dAxisOffsetMax, "d2d_axis_offset_max"},
    {SweepParameter::SideLength, "side_length"},
};

std::size_t to_count(double value, std::string_view name)
{
    if (!(value >= 0.0) || value != std::floor(value) || value > 1e9) {
        throw std::invalid_argument(std::string(name) + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(value);
}

}  // namespace

std::string_view to_string(SweepParameter parameter)
{
    for (const auto& entry : kParameterNames) {
        if (entry.parameter == parameter) return entry.name;
    }
    throw std::invalid_argument("unknown sweep parameter");
}

SweepParameter parse_sweep_parameter(std::string_view name)
{
    for (const auto& entry : kParameterNames) {
        if (entry.name == name) return entry.parameter;
    }
    throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

void set_parameter(SystemParams& params, SweepParameter parameter, double value)
{
    switch (parameter) {
    case SweepParameter::NumCellular: params.num_cellular = to_count(value, "num_cellular"); return;
    case SweepParameter::NumD2d: params.num_d2d = to_count(value, "num_d2d"); return;
    case SweepParameter::MmwaveTxPowerDbm: params.mmwave_tx_power_dbm = value; return;
    case SweepParameter::CellTxPowerDbm: params.cell_tx_power_dbm = value; return;
    case SweepParameter::BlockageBeta: params.blockage_beta = value; return;
    case SweepParameter::HalfpowerBeamwidthDeg: params.halfpower_beamwidth_deg = value; return;
    case SweepParameter::D2dAxisOffsetMax: params.d2d_axis_offset_max = value; return;
    case SweepParameter::SideLength: params.side_length = value; return;
    }
    throw std::invalid_argument("unknown sweep parameter");
}

std::string_view to_string(Seeding seeding)
{
    switch (seeding) {
    case Seeding::SharedAcrossPoints: return "SharedAcrossPoints";
    case Seeding::PerPoint: return "PerPoint";
    }
    throw std::invalid_argument("unknown seeding policy");
}

Seeding parse_seeding(std::string_view name)
{
    if (name == "SharedAcrossPoints") return Seeding::SharedAcrossPoints;
    if (name == "PerPoint") return Seeding::PerPoint;
    throw std::invalid_argument("unknown seeding policy '" + std::string(name) + "'");
}

SystemParams SweepSpec::params_at(std::size_t point) const
{
    SystemParams p = base_params;
    set_parameter(p, swept_parameter, values.at(point));
    if (coupled) {
        set_parameter(p, coupled->parameter, coupled->values.at(point));
    }
    return p;
}

std::string_view to_string(InitialPartition initial)
{
    switch (initial) {
    case InitialPartition::UniformRandom: return "UniformRandom";
    case InitialPartition::AllMmwave: return "AllMmwave";
    }
    throw std::invalid_argument("unknown initial partition");
}

InitialPartition parse_initial_partition(std::string_view name)
{
    if (name == "UniformRandom") return InitialPartition::UniformRandom;
    if (name == "AllMmwave") return InitialPartition::AllMmwave;
    throw std::invalid_argument("unknown initial partition '" + std::string(name) + "'");
}

void SweepSpec::validate() const
{
    if (values.empty()) {
        throw std::invalid_argument("sweep needs at least one parameter value");
    }
    if (trials_per_point < 1) {
        throw std::invalid_argument("sweep needs at least one trial per point");
    }
    if (schemes.empty()) {
        throw std::invalid_argument("sweep needs at least one scheme");
    }
    for (std::size_t i = 0; i < schemes.size(); ++i) {
        for (std::size_t j = i + 1; j < schemes.size(); ++j) {
            if (schemes[i] == schemes[j]) {
                throw std::invalid_argument("scheme listed twice");
            }
        }
    }
    if (coupled) {
        if (coupled->values.size() != values.size()) {
            throw std::invalid_argument("coupled sweep needs one value per point");
        }
        if (coupled->parameter == swept_parameter) {
            throw std::invalid_argument("coupled parameter must differ from the swept one");
        }
    }
    const bool needs_cellular = std::any_of(schemes.begin(), schemes.end(), [](Scheme s) {
        return s == Scheme::CCG || s == Scheme::FCC;
    });
    const bool has_os = std::find(schemes.begin(), schemes.end(), Scheme::OS) != schemes.end();
    for (std::size_t point = 0; point < values.size(); ++point) {
        const SystemParams p = params_at(point);
        p.validate();
        formation.validate(p.num_d2d);
        if (needs_cellular && p.num_cellular == 0) {
            throw std::invalid_argument("CCG and FCC need at least one cellular user");
        }
        if (has_os) {
            double required = 0.0;
            const auto count = enumeration_size(p.num_cellular, p.num_d2d, StrategySpace::Full, &required);
            if (count > os_budget || required > static_cast<double>(os_budget)) {
                throw BudgetExceeded(required, os_budget);
            }
        }
    }
}

TrialSeeds TrialSeeds::derive(std::uint64_t trial_seed)
{
    TrialSeeds s;
    s.scenario = derive_seed(trial_seed, {1});
    s.rc = derive_seed(trial_seed, {2});
    s.fcc = derive_seed(trial_seed, {3});
    s.cg_init = derive_seed(trial_seed, {4});
    s.cg_order = derive_seed(trial_seed, {5});
    s.ccg_init = derive_seed(trial_seed, {6});
    s.ccg_order = derive_seed(trial_seed, {7});
    return s;
}

SchemeOutcome run_scheme(Scheme scheme, const Scenario& scenario, const ChannelModel& model,
                         const TrialSeeds& seeds, const FormationConfig& formation, std::uint64_t os_budget,
                         InitialPartition cg_initial)
{
    SchemeOutcome out;
    out.scheme = scheme;
    switch (scheme) {
    case Scheme::CG: {
        FormationConfig config = formation;
        config.rng_seed = seeds.cg_order;
        config.strategy_space = StrategySpace::Full;
        const Partition initial =
            cg_initial == InitialPartition::AllMmwave
                ? fmc_partition(scenario)
                : random_partition(model.num_cellular(), model.num_d2d(), seeds.cg_init, StrategySpace::Full);
        out.trace = form_coalitions(model, initial, config);
        out.partition = out.trace->final_partition;
        out.initial_sum_rate = system_sum_rate(initial, model).system_sum_rate;
        break;
    }
    case Scheme::CCG: {
        FormationConfig config = formation;
        config.rng_seed = seeds.ccg_order;
        out.trace = ccg_partition(model, config, seeds.ccg_init);
        out.partition = out.trace->final_partition;
        out.initial_sum_rate = system_sum_rate(out.trace->initial_partition, model).system_sum_rate;
        break;
    }
    case Scheme::FMC: out.partition = fmc_partition(scenario); break;
    case Scheme::RC: out.partition = rc_partition(scenario, seeds.rc); break;
    case Scheme::FCC: out.partition = fcc_partition(scenario, seeds.fcc); break;
    case Scheme::OS: {
        auto best = exhaustive_optimal(model, os_budget);
        out.partition = std::move(best.partition);
        break;
    }
    }
    out.sum_rate = system_sum_rate(out.partition, model).system_sum_rate;
    return out;
}

std::uint64_t trial_seed(const SweepSpec& spec, std::size_t point, std::size_t trial)
{
    if (spec.seeding == Seeding::SharedAcrossPoints) {
        return derive_seed(spec.seed, {trial});
    }
    return derive_seed(spec.seed, {point, trial});
}

const SchemeSummary& SweepResult::summary(std::size_t point, Scheme scheme) const
{
    for (const auto& s : summaries) {
        if (s.point == point && s.scheme == scheme) return s;
    }
    throw std::out_of_range("no summary for the requested point and scheme");
}

std::vector<double> SweepResult::rates(std::size_t point, Scheme scheme) const
{
    std::vector<double> out;
    for (const auto& r : records) {
        if (r.point == point && r.scheme == scheme) out.push_back(r.sum_rate);
    }
    return out;
}

std::vector<double> SweepResult::mean_rates(Scheme scheme) const
{
    std::vector<double> out;
    for (std::size_t p = 0; p < spec.num_points(); ++p) {
        out.push_back(summary(p, scheme).mean_rate_bps);
    }
    return out;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options)
{
    spec.validate();
    const std::size_t points = spec.num_points();
    const std::size_t trials = spec.trials_per_point;
    const std::size_t tasks = points * trials;

    std::vector<std::vector<TrialRecord>> slots(tasks);
    std::vector<std::exception_ptr> errors(tasks);

    auto run_task = [&](std::size_t task) {
        const std::size_t point = task / trials;
        const std::size_t trial = task % trials;
        try {
            const std::uint64_t ts = trial_seed(spec, point, trial);
            const TrialSeeds seeds = TrialSeeds::derive(ts);
            SystemParams params = spec.params_at(point);
            params.rng_seed = seeds.scenario;
            const Scenario scenario = generate_scenario(params);
            const ChannelModel model(scenario, params);
            for (Scheme scheme : spec.schemes) {
                SchemeOutcome outcome = run_scheme(scheme, scenario, model, seeds, spec.formation, spec.os_budget,
                                                    spec.cg_initial);
                TrialRecord rec;
                rec.point = point;
                rec.trial = trial;
                rec.trial_seed = ts;
                rec.scheme = scheme;
                rec.sum_rate = outcome.sum_rate;
                rec.initial_sum_rate = outcome.initial_sum_rate;
                if (outcome.trace) {
                    rec.switches = outcome.trace->switch_count();
                    if (options.keep_traces) rec.trace = std::move(outcome.trace);
                }
                slots[task].push_back(std::move(rec));
            }
        } catch (...) {
            errors[task] = std::current_exception();
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks)));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks; ++t) run_task(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < tasks; t = next++) run_task(t);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    SweepResult result;
    result.spec = spec;
    for (auto& slot : slots) {
        for (auto& rec : slot) result.records.push_back(std::move(rec));
    }
    for (std::size_t point = 0; point < points; ++point) {
        for (Scheme scheme : spec.schemes) {
            std::vector<double> rates;
            std::vector<double> switches;
            for (const auto& rec : result.records) {
                if (rec.point != point || rec.scheme != scheme) continue;
                rates.push_back(rec.sum_rate);
                if (rec.switches) switches.push_back(static_cast<double>(*rec.switches));
            }
            SchemeSummary s;
            s.point = point;
            s.param_value = spec.values[point];
            s.scheme = scheme;
            s.mean_rate_bps = stats::mean(rates);
            s.std_rate_bps = stats::sample_std(rates);
            s.trials = rates.size();
            if (is_game_scheme(scheme)) s.mean_switches = stats::mean(switches);
            result.summaries.push_back(s);
        }
    }
    return result;
}

double average_deviation(std::span<const double> os_values, std::span<const double> cg_values)
{
    if (os_values.empty() || os_values.size() != cg_values.size()) {
        throw std::invalid_argument("average deviation needs equal, nonempty lists");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < os_values.size(); ++i) {
        if (!(os_values[i] > 0.0)) {
            throw std::invalid_argument("average deviation needs positive optimal values");
        }
        sum += (os_values[i] - cg_values[i]) / os_values[i];
    }
    return sum / static_cast<double>(os_values.size());
}

ConvergenceStats convergence_stats(std::span<const SwitchTrace> traces)
{
    if (traces.empty()) {
        throw std::invalid_argument("convergence statistics need at least one trace");
    }
    std::vector<double> counts;
    ConvergenceStats out;
    for (const auto& t : traces) {
        counts.push_back(static_cast<double>(t.switch_count()));
        out.max = std::max(out.max, t.switch_count());
    }
    out.mean = stats::mean(counts);
    out.std = stats::sample_std(counts);
    return out;
}

std::string to_csv(const SweepResult& result)
{
    std::ostringstream out;
    out << "param_value,scheme,mean_rate_bps,std_rate_bps,trials,mean_switches\n";
    for (const auto& s : result.summaries) {
        out << format_double(s.param_value) << ',' << to_string(s.scheme) << ','
            << format_double(s.mean_rate_bps) << ',' << format_double(s.std_rate_bps) << ','
            << s.trials << ',';
        if (s.mean_switches) out << format_double(*s.mean_switches);
        out << '\n';
    }
    return out.str();
}

}  // namespace hcn
