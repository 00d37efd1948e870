#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "hcn/geometry.hpp"
#include "hcn/params.hpp"
#include "hcn/scenario.hpp"

namespace hcn {

/// Gaussian-main-lobe directional pattern with a flat side-lobe floor.
struct AntennaPattern {
    double halfpower_beamwidth_deg = 0.0;
    double main_lobe_width_deg = 0.0;  // 2.6 x half-power beamwidth
    double max_gain_db = 0.0;
    double side_lobe_gain_db = 0.0;

    /// Throws std::invalid_argument unless 0 < beamwidth <= 180.
    static AntennaPattern from_beamwidth(double halfpower_beamwidth_deg);
};

/// Pattern gain in dB at theta degrees off boresight.
/// Main lobe: max - 3.01 (2 theta / theta_3dB)^2 up to and including
/// theta_ml / 2; side-lobe level beyond. Throws std::domain_error for theta
/// outside [0, 180].
double antenna_gain_db(double theta_deg, const AntennaPattern& pattern);

/// |h0|^2 G_t G_r l^-n P for a cellular-band link, gains in dBi.
/// Throws InvalidScenario when distance is below params.min_link_distance_m.
double cellular_rx_power(double tx_power_watts, double tx_gain_dbi, double rx_gain_dbi,
                         double distance_m, const SystemParams& params,
                         double fading_power = 1.0);

/// k0 = k0_multiplier (lambda / 4 pi)^2.
double mmwave_k0(const SystemParams& params);

/// Desired mmWave power at link.rx: k0 G_max^2 l^-n P_m.
double mmwave_signal_power(const Link& link, const SystemParams& params);

/// Interference at victim.rx from source.tx: rho k0 G_t(theta_t) G_r(theta_r) l^-n P_m,
/// with the angles from off_boresight_angles.
double mmwave_interference_power(const Link& source, const Link& victim,
                                 const SystemParams& params);

/// Power at the receiver of pair `victim` from the transmitter of pair
/// `source`: the desired signal when they coincide, MUI-scaled interference
/// otherwise.
double mmwave_rx_power(std::size_t victim, std::size_t source, const Scenario& scenario,
                       const SystemParams& params);

enum class DensityUnits { DbmPerHz, DbmPerMHz };

DensityUnits parse_density_units(std::string_view tag);

/// Noise power in watts of a flat density integrated over a bandwidth.
double noise_power(double bandwidth_hz, double density, DensityUnits units);

/// LOS blockage probability 1 - exp(-beta l).
double blockage_probability(double distance_m, double beta);

struct LinkBudget {
    double rx_power_watts = 0.0;
    double interference_power_watts = 0.0;
    double noise_power_watts = 0.0;
    double sinr = 0.0;
};

LinkBudget make_link_budget(double rx_power_watts, double interference_power_watts,
                            double noise_power_watts);

/// Every link power of one scenario, precomputed once.
///
/// The cellular band uses fixed omnidirectional gains (device/BS), the mmWave
/// band the directional pattern at geometric off-boresight angles. Cross-band
/// interference does not exist in this model, and different cellular users
/// occupy orthogonal subcarriers.
class ChannelModel {
public:
    ChannelModel(const Scenario& scenario, const SystemParams& params);

    std::size_t num_cellular() const { return num_cellular_; }
    std::size_t num_d2d() const { return num_d2d_; }
    const SystemParams& params() const { return params_; }

    /// Cellular user c received at the BS.
    double cellular_uplink(std::size_t c) const { return cell_to_bs_[c]; }
    /// D2D transmitter d received at the BS.
    double d2d_to_bs(std::size_t d) const { return d2d_to_bs_[d]; }
    /// Cellular user c received at the receiver of pair d.
    double cellular_to_d2d(std::size_t c, std::size_t d) const { return cell_to_d2d_[c * num_d2d_ + d]; }
    /// Cellular-band power from the transmitter of `source` at the receiver of `victim`.
    double cellular_d2d(std::size_t source, std::size_t victim) const { return cell_d2d_[source * num_d2d_ + victim]; }
    /// mmWave power from the transmitter of `source` at the receiver of `victim`.
    double mmwave(std::size_t source, std::size_t victim) const { return mmwave_[source * num_d2d_ + victim]; }
    /// Blockage probability of pair d's own LOS path.
    double outage(std::size_t d) const { return outage_[d]; }

    double cell_noise() const { return cell_noise_; }
    double mmwave_noise() const { return mmwave_noise_; }

private:
    SystemParams params_;
    std::size_t num_cellular_;
    std::size_t num_d2d_;
    std::vector<double> cell_to_bs_;
    std::vector<double> d2d_to_bs_;
    std::vector<double> cell_to_d2d_;
    std::vector<double> cell_d2d_;
    std::vector<double> mmwave_;
    std::vector<double> outage_;
    double cell_noise_;
    double mmwave_noise_;
};

}  // namespace hcn
