#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcn/geometry.hpp"
#include "hcn/params.hpp"

namespace hcn {

/// Per-link cellular-band power gains |h0|^2 (with shadowing folded in when
/// enabled). Only present when the channel is sampled rather than averaged.
struct ChannelGains {
    std::vector<double> cell_to_bs;        // [c]
    std::vector<double> d2d_tx_to_bs;      // [d]
    std::vector<double> cell_to_d2d_rx;    // [c * D + d]
    std::vector<double> d2d_tx_to_d2d_rx;  // [source * D + victim], diagonal = own link

    bool operator==(const ChannelGains&) const = default;
};

/// A single-cell layout: base station, cellular users and D2D pairs.
struct Scenario {
    double side_length = 0.0;
    Point bs_position;
    std::vector<Point> cellular_positions;
    std::vector<Point> d2d_tx_positions;
    std::vector<Point> d2d_rx_positions;
    std::optional<ChannelGains> channel_gains;

    std::size_t num_cellular() const { return cellular_positions.size(); }
    std::size_t num_d2d() const { return d2d_tx_positions.size(); }
    Link d2d_link(std::size_t d) const { return {d2d_tx_positions.at(d), d2d_rx_positions.at(d)}; }

    bool operator==(const Scenario&) const = default;
};

/// True when the parameters ask for per-link sampled cellular gains.
bool samples_channel_gains(const SystemParams& params);

/// Draws a layout: BS at the center, cellular users and D2D transmitters
/// uniform over the square, each receiver offset from its transmitter by
/// independent per-axis uniforms on [-a, a]. Offsets landing outside the
/// square are redrawn. Any draw closer than min_link_distance_m to an already
/// placed node is redrawn as well, so every link in the layout is evaluable.
/// Pure function of params (including rng_seed).
Scenario generate_scenario(const SystemParams& params);

/// Checks dimensions against params, containment in the square, per-axis pair
/// offsets, and that every link the rate model evaluates is at least
/// min_link_distance_m long. Throws InvalidScenario.
void validate_scenario(const Scenario& scenario, const SystemParams& params);

}  // namespace hcn
