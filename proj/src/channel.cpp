#include "hcn/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hcn/errors.hpp"
#include "hcn/units.hpp"

namespace hcn {

AntennaPattern AntennaPattern::from_beamwidth(double halfpower_beamwidth_deg)
{
    if (!(halfpower_beamwidth_deg > 0.0 && halfpower_beamwidth_deg <= 180.0)) {
        throw std::invalid_argument("half-power beamwidth must lie in (0, 180] degrees");
    }
    AntennaPattern p;
    p.halfpower_beamwidth_deg = halfpower_beamwidth_deg;
    p.main_lobe_width_deg = 2.6 * halfpower_beamwidth_deg;
    const double half_rad = units::deg_to_rad(halfpower_beamwidth_deg / 2.0);
    p.max_gain_db = 20.0 * std::log10(1.6162 / std::sin(half_rad));
    p.side_lobe_gain_db = -0.4111 * std::log(halfpower_beamwidth_deg) - 10.579;
    return p;
}

double antenna_gain_db(double theta_deg, const AntennaPattern& pattern)
{
    if (!(theta_deg >= 0.0 && theta_deg <= 180.0)) {
        throw std::domain_error("off-boresight angle must lie in [0, 180] degrees");
    }
    // The junction itself belongs to the main lobe.
    if (theta_deg <= pattern.main_lobe_width_deg / 2.0) {
        const double r = 2.0 * theta_deg / pattern.halfpower_beamwidth_deg;
        return pattern.max_gain_db - 3.01 * r * r;
    }
    return pattern.side_lobe_gain_db;
}

namespace {

void require_link_length(double distance_m, const SystemParams& params)
{
    if (!(distance_m >= params.min_link_distance_m)) {
        throw InvalidScenario("link of length " + std::to_string(distance_m)
                              + " m is below the minimum link distance");
    }
}

}  // namespace

double cellular_rx_power(double tx_power_watts, double tx_gain_dbi, double rx_gain_dbi,
                         double distance_m, const SystemParams& params, double fading_power)
{
    require_link_length(distance_m, params);
    const double gains = units::db_to_linear(tx_gain_dbi) * units::db_to_linear(rx_gain_dbi);
    return fading_power * gains * std::pow(distance_m, -params.pathloss_exponent) * tx_power_watts;
}

double mmwave_k0(const SystemParams& params)
{
    const double ratio = params.mmwave_wavelength_m / (4.0 * std::numbers::pi);
    return params.k0_multiplier * ratio * ratio;
}

double mmwave_signal_power(const Link& link, const SystemParams& params)
{
    const double l = distance(link.tx, link.rx);
    require_link_length(l, params);
    const auto pattern = AntennaPattern::from_beamwidth(params.halfpower_beamwidth_deg);
    const double g = units::db_to_linear(pattern.max_gain_db);
    return mmwave_k0(params) * g * g * std::pow(l, -params.pathloss_exponent)
           * units::dbm_to_watts(params.mmwave_tx_power_dbm);
}

double mmwave_interference_power(const Link& source, const Link& victim, const SystemParams& params)
{
    const double l = distance(source.tx, victim.rx);
    require_link_length(l, params);
    const auto pattern = AntennaPattern::from_beamwidth(params.halfpower_beamwidth_deg);
    const BoresightAngles angles = off_boresight_angles(source, victim);
    const double g_tx = units::db_to_linear(antenna_gain_db(angles.tx_deg, pattern));
    const double g_rx = units::db_to_linear(antenna_gain_db(angles.rx_deg, pattern));
    return params.mui_factor * mmwave_k0(params) * g_tx * g_rx
           * std::pow(l, -params.pathloss_exponent)
           * units::dbm_to_watts(params.mmwave_tx_power_dbm);
}

double mmwave_rx_power(std::size_t victim, std::size_t source, const Scenario& scenario,
                       const SystemParams& params)
{
    if (victim >= scenario.num_d2d() || source >= scenario.num_d2d()) {
        throw std::invalid_argument("D2D index out of range");
    }
    if (victim == source) {
        return mmwave_signal_power(scenario.d2d_link(victim), params);
    }
    return mmwave_interference_power(scenario.d2d_link(source), scenario.d2d_link(victim), params);
}

DensityUnits parse_density_units(std::string_view tag)
{
    if (tag == "dBm/Hz") return DensityUnits::DbmPerHz;
    if (tag == "dBm/MHz") return DensityUnits::DbmPerMHz;
    throw std::invalid_argument("unknown noise density units '" + std::string(tag) + "'");
}

double noise_power(double bandwidth_hz, double density, DensityUnits units)
{
    if (!(bandwidth_hz > 0.0)) {
        throw std::invalid_argument("bandwidth must be positive");
    }
    double per_hz_dbm = 0.0;
    switch (units) {
    case DensityUnits::DbmPerHz: per_hz_dbm = density; break;
    case DensityUnits::DbmPerMHz: per_hz_dbm = density - 60.0; break;
    default: throw std::invalid_argument("unknown noise density units");
    }
    return units::dbm_to_watts(per_hz_dbm + units::linear_to_db(bandwidth_hz));
}

double blockage_probability(double distance_m, double beta)
{
    if (!(distance_m >= 0.0) || !(beta >= 0.0)) {
        throw std::invalid_argument("blockage probability needs distance >= 0 and beta >= 0");
    }
    return -std::expm1(-beta * distance_m);
}

LinkBudget make_link_budget(double rx_power_watts, double interference_power_watts,
                            double noise_power_watts)
{
    if (!(rx_power_watts >= 0.0) || !(interference_power_watts >= 0.0) || !(noise_power_watts > 0.0)) {
        throw std::invalid_argument("link budget needs non-negative powers and positive noise");
    }
    return {rx_power_watts, interference_power_watts, noise_power_watts,
            rx_power_watts / (interference_power_watts + noise_power_watts)};
}

ChannelModel::ChannelModel(const Scenario& scenario, const SystemParams& params)
    : params_(params),
      num_cellular_(scenario.num_cellular()),
      num_d2d_(scenario.num_d2d())
{
    params.validate();
    validate_scenario(scenario, params);

    const std::size_t nc = num_cellular_;
    const std::size_t nd = num_d2d_;
    const ChannelGains* fading = scenario.channel_gains ? &*scenario.channel_gains : nullptr;
    const double p_cell = units::dbm_to_watts(params.cell_tx_power_dbm);
    const double g_dev = params.device_gain_dbi;
    const double g_bs = params.bs_gain_dbi;

    cell_to_bs_.resize(nc);
    cell_to_d2d_.resize(nc * nd);
    for (std::size_t c = 0; c < nc; ++c) {
        const Point pos = scenario.cellular_positions[c];
        cell_to_bs_[c] = cellular_rx_power(p_cell, g_dev, g_bs, distance(pos, scenario.bs_position),
                                           params, fading ? fading->cell_to_bs[c] : 1.0);
        for (std::size_t d = 0; d < nd; ++d) {
            cell_to_d2d_[c * nd + d] = cellular_rx_power(
                p_cell, g_dev, g_dev, distance(pos, scenario.d2d_rx_positions[d]), params,
                fading ? fading->cell_to_d2d_rx[c * nd + d] : 1.0);
        }
    }

    d2d_to_bs_.resize(nd);
    cell_d2d_.resize(nd * nd);
    mmwave_.resize(nd * nd);
    outage_.resize(nd);
    for (std::size_t j = 0; j < nd; ++j) {
        const Point tx = scenario.d2d_tx_positions[j];
        d2d_to_bs_[j] = cellular_rx_power(p_cell, g_dev, g_bs, distance(tx, scenario.bs_position),
                                          params, fading ? fading->d2d_tx_to_bs[j] : 1.0);
        for (std::size_t i = 0; i < nd; ++i) {
            cell_d2d_[j * nd + i] = cellular_rx_power(
                p_cell, g_dev, g_dev, distance(tx, scenario.d2d_rx_positions[i]), params,
                fading ? fading->d2d_tx_to_d2d_rx[j * nd + i] : 1.0);
            mmwave_[j * nd + i] = mmwave_rx_power(i, j, scenario, params);
        }
        outage_[j] = blockage_probability(distance(tx, scenario.d2d_rx_positions[j]),
                                          params.blockage_beta);
    }

    cell_noise_ = noise_power(params.cell_bandwidth_hz, params.cell_noise_density, DensityUnits::DbmPerHz);
    mmwave_noise_ = noise_power(params.mmwave_bandwidth_hz, params.mmwave_noise_density,
                                DensityUnits::DbmPerMHz);
}

}  // namespace hcn
