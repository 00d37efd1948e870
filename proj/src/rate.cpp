#include "hcn/rate.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hcn {

double shannon_rate(double bandwidth_hz, double sinr)
{
    return bandwidth_hz * std::log1p(sinr) / std::numbers::ln2;
}

namespace {

void check_members(std::span<const std::size_t> members, std::size_t num_d2d)
{
    std::vector<bool> seen(num_d2d, false);
    for (std::size_t d : members) {
        if (d >= num_d2d) {
            throw std::invalid_argument("D2D index out of range");
        }
        if (seen[d]) {
            throw std::invalid_argument("D2D index repeated in coalition");
        }
        seen[d] = true;
    }
}

// Shared by the value-only and the detailed evaluations so both sum in the
// same order and agree bit for bit. `on_member(k, rate)` sees each R_d.
template <typename OnMember>
double cellular_value(std::size_t c, std::span<const std::size_t> members, const ChannelModel& m,
                      double& cellular_rate, OnMember&& on_member)
{
    const double w = m.params().cell_bandwidth_hz;
    const double noise = m.cell_noise();

    double at_bs = 0.0;
    for (std::size_t d : members) {
        at_bs += m.d2d_to_bs(d);
    }
    cellular_rate = shannon_rate(w, m.cellular_uplink(c) / (at_bs + noise));

    double value = cellular_rate;
    for (std::size_t k = 0; k < members.size(); ++k) {
        const std::size_t d = members[k];
        double interference = m.cellular_to_d2d(c, d);
        for (std::size_t other : members) {
            if (other != d) {
                interference += m.cellular_d2d(other, d);
            }
        }
        const double rate = shannon_rate(w, m.cellular_d2d(d, d) / (interference + noise));
        on_member(k, rate);
        value += rate;
    }
    return value;
}

template <typename OnMember>
double mmwave_value(std::span<const std::size_t> members, const ChannelModel& m, OnMember&& on_member)
{
    const double w = m.params().mmwave_bandwidth_hz;
    const double noise = m.mmwave_noise();

    double value = 0.0;
    for (std::size_t k = 0; k < members.size(); ++k) {
        const std::size_t d = members[k];
        double interference = 0.0;
        for (std::size_t other : members) {
            if (other != d) {
                interference += m.mmwave(other, d);
            }
        }
        const double rate = shannon_rate(w, m.mmwave(d, d) / (interference + noise));
        on_member(k, rate);
        value += (1.0 - m.outage(d)) * rate;
    }
    return value;
}

}  // namespace

CellularCoalitionRates cellular_coalition_value(std::size_t c, std::span<const std::size_t> members,
                                                const ChannelModel& model)
{
    if (c >= model.num_cellular()) {
        throw std::invalid_argument("cellular index out of range");
    }
    check_members(members, model.num_d2d());
    CellularCoalitionRates out;
    out.member_rates.resize(members.size());
    out.value = cellular_value(c, members, model, out.cellular_rate,
                               [&](std::size_t k, double r) { out.member_rates[k] = r; });
    return out;
}

MmwaveCoalitionRates mmwave_coalition_value(std::span<const std::size_t> members,
                                            const ChannelModel& model)
{
    check_members(members, model.num_d2d());
    MmwaveCoalitionRates out;
    out.member_rates.resize(members.size());
    out.value = mmwave_value(members, model, [&](std::size_t k, double r) { out.member_rates[k] = r; });
    return out;
}

double detail::coalition_value_unchecked(std::size_t coalition, std::span<const std::size_t> members,
                                         const ChannelModel& model)
{
    auto ignore = [](std::size_t, double) {};
    if (coalition == model.num_cellular()) {
        return mmwave_value(members, model, ignore);
    }
    double cellular_rate = 0.0;
    return cellular_value(coalition, members, model, cellular_rate, ignore);
}

double coalition_value(std::size_t coalition, std::span<const std::size_t> members,
                       const ChannelModel& model)
{
    if (coalition > model.num_cellular()) {
        throw std::invalid_argument("coalition id out of range");
    }
    check_members(members, model.num_d2d());
    return detail::coalition_value_unchecked(coalition, members, model);
}

RateReport system_sum_rate(const Partition& partition, const ChannelModel& model)
{
    if (partition.num_cellular() != model.num_cellular() || partition.num_d2d() != model.num_d2d()) {
        throw std::invalid_argument("partition dimensions do not match the scenario");
    }
    const std::size_t nc = model.num_cellular();
    RateReport report;
    report.per_cellular_rate.resize(nc);
    report.per_d2d_rate.resize(model.num_d2d());
    report.per_coalition_value.resize(nc + 1);

    const auto groups = partition.coalitions();
    for (std::size_t c = 0; c < nc; ++c) {
        const auto& members = groups[c];
        report.per_coalition_value[c] = cellular_value(
            c, members, model, report.per_cellular_rate[c],
            [&](std::size_t k, double r) { report.per_d2d_rate[members[k]] = r; });
    }
    const auto& mm = groups[nc];
    report.per_coalition_value[nc] =
        mmwave_value(mm, model, [&](std::size_t k, double r) { report.per_d2d_rate[mm[k]] = r; });

    for (double v : report.per_coalition_value) {
        report.system_sum_rate += v;
    }
    return report;
}

RateReport system_sum_rate(const Partition& partition, const Scenario& scenario,
                           const SystemParams& params)
{
    return system_sum_rate(partition, ChannelModel(scenario, params));
}

}  // namespace hcn
