#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hcn/channel.hpp"
#include "hcn/partition.hpp"

namespace hcn {

/// W log2(1 + sinr), evaluated through log1p.
double shannon_rate(double bandwidth_hz, double sinr);

struct CellularCoalitionRates {
    double cellular_rate = 0.0;       // R_c
    std::vector<double> member_rates;  // R_d, same order as the members
    double value = 0.0;               // R_c + sum R_d
};

struct MmwaveCoalitionRates {
    std::vector<double> member_rates;  // R_d before outage
    double value = 0.0;               // sum (1 - P_out) R_d
};

/// Rates of cellular user c's uplink shared with `members`.
/// Throws std::invalid_argument for out-of-range or repeated indices.
CellularCoalitionRates cellular_coalition_value(std::size_t c, std::span<const std::size_t> members,
                                                const ChannelModel& model);

/// Rates of the pairs sharing the mmWave band.
MmwaveCoalitionRates mmwave_coalition_value(std::span<const std::size_t> members,
                                            const ChannelModel& model);

/// Value R(F) of coalition `coalition` (id num_cellular is the mmWave band).
/// Bit-identical to the `value` field of the two functions above.
double coalition_value(std::size_t coalition, std::span<const std::size_t> members,
                       const ChannelModel& model);

struct RateReport {
    std::vector<double> per_cellular_rate;     // R_c, one per cellular user
    std::vector<double> per_d2d_rate;          // R_d before outage, one per pair
    std::vector<double> per_coalition_value;   // R(F_c), C + 1 entries
    double system_sum_rate = 0.0;

    bool operator==(const RateReport&) const = default;
};

/// Full evaluation of a partition. Cellular users with an empty coalition
/// still contribute their interference-free uplink rate. Throws
/// std::invalid_argument on dimension mismatch.
RateReport system_sum_rate(const Partition& partition, const ChannelModel& model);

RateReport system_sum_rate(const Partition& partition, const Scenario& scenario,
                           const SystemParams& params);

namespace detail {
// Unchecked variant for hot loops; members must be valid and distinct.
double coalition_value_unchecked(std::size_t coalition, std::span<const std::size_t> members,
                                 const ChannelModel& model);
}  // namespace detail

}  // namespace hcn
