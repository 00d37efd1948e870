#include "hcn/scenario.hpp"

#include <cmath>
#include <string>

#include "hcn/errors.hpp"
#include "hcn/random.hpp"
#include "hcn/units.hpp"

namespace hcn {

bool samples_channel_gains(const SystemParams& params)
{
    return params.fading_mode == FadingMode::SampledRayleigh || params.shadowing_sigma_db > 0.0;
}

namespace {

bool clear_of(Point p, const std::vector<Point>& placed, double min_distance)
{
    for (const Point& q : placed) {
        if (distance(p, q) < min_distance) {
            return false;
        }
    }
    return true;
}

double draw_link_gain(Rng& rng, const SystemParams& params)
{
    double gain = 1.0;
    if (params.fading_mode == FadingMode::SampledRayleigh) {
        gain *= rng.exponential(1.0);
    }
    if (params.shadowing_sigma_db > 0.0) {
        gain *= units::db_to_linear(params.shadowing_sigma_db * rng.normal());
    }
    return gain;
}

ChannelGains draw_channel_gains(Rng& rng, const SystemParams& params)
{
    const std::size_t c_count = params.num_cellular;
    const std::size_t d_count = params.num_d2d;
    ChannelGains gains;
    gains.cell_to_bs.resize(c_count);
    gains.d2d_tx_to_bs.resize(d_count);
    gains.cell_to_d2d_rx.resize(c_count * d_count);
    gains.d2d_tx_to_d2d_rx.resize(d_count * d_count);
    for (double& g : gains.cell_to_bs) g = draw_link_gain(rng, params);
    for (double& g : gains.d2d_tx_to_bs) g = draw_link_gain(rng, params);
    for (double& g : gains.cell_to_d2d_rx) g = draw_link_gain(rng, params);
    for (double& g : gains.d2d_tx_to_d2d_rx) g = draw_link_gain(rng, params);
    return gains;
}

}  // namespace

Scenario generate_scenario(const SystemParams& params)
{
    params.validate();
    Rng rng(params.rng_seed);

    const double side = params.side_length;
    const double offset = params.d2d_axis_offset_max;
    const double min_gap = params.min_link_distance_m;

    Scenario s;
    s.side_length = side;
    s.bs_position = {side / 2.0, side / 2.0};
    s.cellular_positions.reserve(params.num_cellular);
    s.d2d_tx_positions.reserve(params.num_d2d);
    s.d2d_rx_positions.reserve(params.num_d2d);

    std::vector<Point> placed{s.bs_position};

    auto uniform_point = [&] { return Point{rng.uniform(0.0, side), rng.uniform(0.0, side)}; };

    for (std::size_t c = 0; c < params.num_cellular; ++c) {
        Point p = uniform_point();
        while (!clear_of(p, placed, min_gap)) {
            p = uniform_point();
        }
        s.cellular_positions.push_back(p);
        placed.push_back(p);
    }

    for (std::size_t d = 0; d < params.num_d2d; ++d) {
        Point tx = uniform_point();
        while (!clear_of(tx, placed, min_gap)) {
            tx = uniform_point();
        }
        placed.push_back(tx);

        Point rx;
        for (;;) {
            rx = {tx.x + rng.uniform(-offset, offset), tx.y + rng.uniform(-offset, offset)};
            const bool inside = rx.x >= 0.0 && rx.x <= side && rx.y >= 0.0 && rx.y <= side;
            if (inside && clear_of(rx, placed, min_gap)) {
                break;
            }
        }
        placed.push_back(rx);
        s.d2d_tx_positions.push_back(tx);
        s.d2d_rx_positions.push_back(rx);
    }

    if (samples_channel_gains(params)) {
        s.channel_gains = draw_channel_gains(rng, params);
    }
    return s;
}

namespace {

void check_link(Point a, Point b, double min_distance, const std::string& what)
{
    if (!(distance(a, b) >= min_distance)) {
        throw InvalidScenario(what + " is shorter than the minimum link distance");
    }
}

}  // namespace

void validate_scenario(const Scenario& s, const SystemParams& params)
{
    const std::size_t c_count = s.num_cellular();
    const std::size_t d_count = s.num_d2d();
    if (c_count != params.num_cellular || d_count != params.num_d2d
        || s.d2d_rx_positions.size() != d_count) {
        throw InvalidScenario("scenario dimensions do not match the parameters");
    }
    if (s.side_length != params.side_length) {
        throw InvalidScenario("scenario side length does not match the parameters");
    }

    auto inside = [&](Point p) {
        return p.x >= 0.0 && p.x <= s.side_length && p.y >= 0.0 && p.y <= s.side_length;
    };
    if (!inside(s.bs_position)) throw InvalidScenario("base station outside the area");
    for (Point p : s.cellular_positions) {
        if (!inside(p)) throw InvalidScenario("cellular user outside the area");
    }
    // Offsets are recomputed from stored coordinates, hence the rounding slack.
    const double offset_limit = params.d2d_axis_offset_max * (1.0 + 1e-12);
    for (std::size_t d = 0; d < d_count; ++d) {
        const Point tx = s.d2d_tx_positions[d];
        const Point rx = s.d2d_rx_positions[d];
        if (!inside(tx) || !inside(rx)) throw InvalidScenario("D2D node outside the area");
        if (std::abs(rx.x - tx.x) > offset_limit || std::abs(rx.y - tx.y) > offset_limit) {
            throw InvalidScenario("D2D pair " + std::to_string(d) + " exceeds the axis offset bound");
        }
    }

    const double gap = params.min_link_distance_m;
    for (std::size_t c = 0; c < c_count; ++c) {
        check_link(s.cellular_positions[c], s.bs_position, gap, "cellular uplink " + std::to_string(c));
        for (std::size_t d = 0; d < d_count; ++d) {
            check_link(s.cellular_positions[c], s.d2d_rx_positions[d], gap,
                       "cellular user " + std::to_string(c) + " to D2D receiver " + std::to_string(d));
        }
    }
    for (std::size_t j = 0; j < d_count; ++j) {
        check_link(s.d2d_tx_positions[j], s.bs_position, gap, "D2D transmitter " + std::to_string(j) + " to BS");
        for (std::size_t i = 0; i < d_count; ++i) {
            check_link(s.d2d_tx_positions[j], s.d2d_rx_positions[i], gap,
                       "D2D transmitter " + std::to_string(j) + " to receiver " + std::to_string(i));
        }
    }

    if (samples_channel_gains(params) != s.channel_gains.has_value()) {
        throw InvalidScenario("channel gains presence does not match the fading configuration");
    }
    if (s.channel_gains) {
        const ChannelGains& g = *s.channel_gains;
        if (g.cell_to_bs.size() != c_count || g.d2d_tx_to_bs.size() != d_count
            || g.cell_to_d2d_rx.size() != c_count * d_count
            || g.d2d_tx_to_d2d_rx.size() != d_count * d_count) {
            throw InvalidScenario("channel gain tables have the wrong size");
        }
    }
}

}  // namespace hcn
