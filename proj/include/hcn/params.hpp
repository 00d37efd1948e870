#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hcn {

/// How the cellular-band power gain |h0|^2 is modeled.
///  - AverageChannel: |h0|^2 = 1, the mean of a unit-variance Rayleigh tap.
///  - SampledRayleigh: one exponential(mean 1) draw per link per scenario.
enum class FadingMode { AverageChannel, SampledRayleigh };

std::string_view to_string(FadingMode mode);
FadingMode parse_fading_mode(std::string_view name);

/// Physical and algorithmic constants of the single-cell two-band system.
/// Defaults reproduce the standard simulation table (60 GHz carrier).
struct SystemParams {
    std::size_t num_cellular = 8;
    std::size_t num_d2d = 30;

    double side_length = 500.0;         // m, square deployment area edge
    double d2d_axis_offset_max = 10.0;  // m, max |dx| and |dy| within a pair

    double cell_bandwidth_hz = 15e3;
    double mmwave_bandwidth_hz = 2160e6;
    double cell_noise_density = -174.0;    // dBm/Hz
    double mmwave_noise_density = -134.0;  // dBm/MHz

    double cell_tx_power_dbm = 23.0;
    double mmwave_tx_power_dbm = 20.0;
    double pathloss_exponent = 2.0;
    double mui_factor = 1.0;
    double halfpower_beamwidth_deg = 30.0;
    double blockage_beta = 0.01;  // 1/m
    double device_gain_dbi = 0.5;
    double bs_gain_dbi = 14.0;
    double mmwave_wavelength_m = 0.005;

    // k0 = k0_multiplier * (lambda / 4 pi)^2; 1 gives the Friis form.
    double k0_multiplier = 1.0;
    // Links shorter than this are rejected instead of letting l^-n blow up.
    double min_link_distance_m = 0.1;
    // Log-normal shadowing on cellular-band links; 0 disables it.
    double shadowing_sigma_db = 0.0;

    FadingMode fading_mode = FadingMode::AverageChannel;
    std::uint64_t rng_seed = 1;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;

    bool operator==(const SystemParams&) const = default;
};

}  // namespace hcn
