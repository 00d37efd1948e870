#include "hcn/params.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

std::string count_text(double n)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, n < 1e15 ? "%.0f" : "%.3e", n);
    return buf;
}

}  // namespace

BudgetExceeded::BudgetExceeded(double required, std::uint64_t budget)
    : std::runtime_error("exhaustive search needs " + count_text(required)
                         + " evaluations, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget)
{
}

std::string_view to_string(FadingMode mode)
{
    switch (mode) {
    case FadingMode::AverageChannel: return "AverageChannel";
    case FadingMode::SampledRayleigh: return "SampledRayleigh";
    }
    throw std::invalid_argument("unknown fading mode");
}

FadingMode parse_fading_mode(std::string_view name)
{
    if (name == "AverageChannel") return FadingMode::AverageChannel;
    if (name == "SampledRayleigh") return FadingMode::SampledRayleigh;
    throw std::invalid_argument("unknown fading mode '" + std::string(name) + "'");
}

namespace {

void require(bool ok, const char* what)
{
    if (!ok) {
        throw std::invalid_argument(std::string("invalid SystemParams: ") + what);
    }
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void SystemParams::validate() const
{
    require(positive(side_length), "side_length must be > 0");
    require(positive(d2d_axis_offset_max), "d2d_axis_offset_max must be > 0");
    require(d2d_axis_offset_max * std::sqrt(2.0) <= side_length,
            "d2d_axis_offset_max * sqrt(2) must not exceed side_length");
    require(positive(cell_bandwidth_hz), "cell_bandwidth_hz must be > 0");
    require(positive(mmwave_bandwidth_hz), "mmwave_bandwidth_hz must be > 0");
    require(std::isfinite(cell_noise_density), "cell_noise_density must be finite");
    require(std::isfinite(mmwave_noise_density), "mmwave_noise_density must be finite");
    require(std::isfinite(cell_tx_power_dbm), "cell_tx_power_dbm must be finite");
    require(std::isfinite(mmwave_tx_power_dbm), "mmwave_tx_power_dbm must be finite");
    require(positive(pathloss_exponent), "pathloss_exponent must be > 0");
    require(non_negative(mui_factor), "mui_factor must be >= 0");
    require(std::isfinite(halfpower_beamwidth_deg) && halfpower_beamwidth_deg > 0.0
                && halfpower_beamwidth_deg <= 180.0,
            "halfpower_beamwidth_deg must lie in (0, 180]");
    require(non_negative(blockage_beta), "blockage_beta must be >= 0");
    require(std::isfinite(device_gain_dbi), "device_gain_dbi must be finite");
    require(std::isfinite(bs_gain_dbi), "bs_gain_dbi must be finite");
    require(positive(mmwave_wavelength_m), "mmwave_wavelength_m must be > 0");
    require(positive(k0_multiplier), "k0_multiplier must be > 0");
    require(positive(min_link_distance_m), "min_link_distance_m must be > 0");
    require(min_link_distance_m < d2d_axis_offset_max,
            "min_link_distance_m must be below d2d_axis_offset_max");
    require(non_negative(shadowing_sigma_db), "shadowing_sigma_db must be >= 0");
}

}  // namespace hcn
