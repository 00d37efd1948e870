#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hcn/channel.hpp"
#include "hcn/errors.hpp"
#include "hcn/random.hpp"
#include "hcn/units.hpp"
#include "reference/reference_model.hpp"

using namespace hcn;

namespace {

Scenario two_links(Point a_tx, Point a_rx, Point b_tx, Point b_rx)
{
    Scenario s;
    s.side_length = 500;
    s.bs_position = {250, 250};
    s.d2d_tx_positions = {a_tx, b_tx};
    s.d2d_rx_positions = {a_rx, b_rx};
    return s;
}

}  // namespace

TEST_CASE("antenna pattern at the reference beamwidth")
{
    AntennaPattern p = AntennaPattern::from_beamwidth(30.0);
    CHECK(p.main_lobe_width_deg == doctest::Approx(78.0));
    CHECK(antenna_gain_db(0.0, p) == doctest::Approx(15.9099774372099657).epsilon(1e-12));
    CHECK(antenna_gain_db(15.0, p) == doctest::Approx(12.8999774372099657).epsilon(1e-12));
    CHECK(antenna_gain_db(90.0, p) == doctest::Approx(-11.9772322436013121).epsilon(1e-12));
    CHECK(antenna_gain_db(180.0, p) == doctest::Approx(-11.9772322436013121).epsilon(1e-12));
    CHECK_THROWS_AS(antenna_gain_db(-1.0, p), std::domain_error);
    CHECK_THROWS_AS(antenna_gain_db(180.5, p), std::domain_error);
    CHECK_THROWS_AS(AntennaPattern::from_beamwidth(0.0), std::invalid_argument);
}

TEST_CASE("main lobe gain decreases away from boresight")
{
    for (double hp : {10.0, 30.0, 60.0, 80.0}) {
        AntennaPattern p = AntennaPattern::from_beamwidth(hp);
        double prev = antenna_gain_db(0.0, p);
        for (double t = 0.5; t <= p.main_lobe_width_deg / 2.0; t += 0.5) {
            double g = antenna_gain_db(t, p);
            CHECK(g < prev);
            prev = g;
        }
        CHECK(antenna_gain_db(p.main_lobe_width_deg / 2.0 + 1e-9, p) == p.side_lobe_gain_db);
    }
}

TEST_CASE("antenna gain matches the oracle on random inputs")
{
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        const double hp = rng.uniform(5.0, 90.0);
        const double theta = rng.uniform(0.0, 180.0);
        const double got = units::db_to_linear(antenna_gain_db(theta, AntennaPattern::from_beamwidth(hp)));
        const double want = std::pow(10.0, reference::gain_db(theta, hp) / 10.0);
        CHECK(reference::close_rel(got, want));
    }
}

TEST_CASE("cellular received power")
{
    SystemParams p;
    p.pathloss_exponent = 2.0;
    p.min_link_distance_m = 0.1;
    CHECK(cellular_rx_power(1.0, 0.0, 0.0, 1.0, p) == doctest::Approx(1.0));
    CHECK(cellular_rx_power(1.0, 0.0, 0.0, 2.0, p) == doctest::Approx(0.25));

    const double w = cellular_rx_power(units::dbm_to_watts(23.0), 0.5, 14.0, 100.0, p);
    CHECK(units::watts_to_dbm(w) == doctest::Approx(-2.5).epsilon(1e-12));
    CHECK(w == doctest::Approx(5.62341325190349080e-4).epsilon(1e-12));

    CHECK_THROWS_AS(cellular_rx_power(1.0, 0.0, 0.0, 0.0, p), InvalidScenario);
    CHECK_THROWS_AS(cellular_rx_power(1.0, 0.0, 0.0, 0.05, p), InvalidScenario);
}

TEST_CASE("cellular power matches the dB-domain oracle on random inputs")
{
    Rng rng(12);
    SystemParams p;
    for (int i = 0; i < 1000; ++i) {
        p.pathloss_exponent = rng.uniform(1.5, 4.5);
        const double p_dbm = rng.uniform(-10.0, 40.0);
        const double gt = rng.uniform(-5.0, 20.0);
        const double gr = rng.uniform(-5.0, 20.0);
        const double l = rng.uniform(0.1, 800.0);
        const double h2 = rng.exponential(1.0) + 1e-6;
        const double got = cellular_rx_power(units::dbm_to_watts(p_dbm), gt, gr, l, p, h2);
        CHECK(reference::close_rel(got, reference::cellular_power_w(p_dbm, gt, gr, l, p.pathloss_exponent, h2)));
    }
}

TEST_CASE("mmWave powers of fixed link pairs")
{
    SystemParams p;
    p.num_cellular = 0;
    p.num_d2d = 2;

    // parallel links 20 m apart, both angles well outside the main lobe
    Scenario wide = two_links({100, 100}, {110, 100}, {100, 120}, {110, 120});
    CHECK(mmwave_rx_power(1, 0, wide, p) == doctest::Approx(1.27380757611078493e-13).epsilon(1e-10));
    // 3 m apart, both angles about 16.7 degrees, inside the main lobe
    Scenario close = two_links({100, 100}, {110, 100}, {100, 103}, {110, 103});
    CHECK(mmwave_rx_power(1, 0, close, p) == doctest::Approx(3.96251681029817748e-8).epsilon(1e-10));
    CHECK(mmwave_rx_power(0, 0, close, p) == doctest::Approx(2.40721991717355641e-7).epsilon(1e-10));

    for (const Scenario* s : {&wide, &close}) {
        for (std::size_t v = 0; v < 2; ++v) {
            for (std::size_t src = 0; src < 2; ++src) {
                CHECK(reference::close_rel(mmwave_rx_power(v, src, *s, p), reference::mmwave_power_w(*s, p, v, src)));
            }
        }
    }

    p.mui_factor = 0.0;
    CHECK(mmwave_rx_power(1, 0, close, p) == 0.0);
    CHECK(mmwave_rx_power(0, 1, close, p) == 0.0);
    CHECK(mmwave_rx_power(0, 0, close, p) > 0.0);
}

TEST_CASE("mmWave power matches the oracle on random layouts")
{
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        SystemParams p;
        p.halfpower_beamwidth_deg = rng.uniform(5.0, 90.0);
        p.mmwave_tx_power_dbm = rng.uniform(0.0, 30.0);
        p.mui_factor = rng.uniform(0.1, 1.0);
        p.pathloss_exponent = rng.uniform(1.8, 3.0);
        auto pt = [&] { return Point{rng.uniform(0, 500), rng.uniform(0, 500)}; };
        Point a = pt(), b = pt();
        Scenario s = two_links(a, {a.x + rng.uniform(-10, 10), a.y + rng.uniform(-10, 10)},
                               b, {b.x + rng.uniform(-10, 10), b.y + rng.uniform(-10, 10)});
        const std::size_t v = rng.index(2), src = rng.index(2);
        CHECK(reference::close_rel(mmwave_rx_power(v, src, s, p), reference::mmwave_power_w(s, p, v, src)));
    }
}

TEST_CASE("mmWave power rejects coincident endpoints")
{
    SystemParams p;
    Scenario s = two_links({100, 100}, {100, 100}, {120, 120}, {125, 125});
    CHECK_THROWS_AS(mmwave_rx_power(0, 0, s, p), InvalidScenario);
    CHECK_THROWS_AS(mmwave_signal_power(Link{{1, 1}, {1, 1}}, p), InvalidScenario);
}

TEST_CASE("noise power")
{
    CHECK(units::watts_to_dbm(noise_power(15e3, -174.0, DensityUnits::DbmPerHz)) ==
          doctest::Approx(-132.239087409443188).epsilon(1e-12));
    CHECK(units::watts_to_dbm(noise_power(2160e6, -134.0, DensityUnits::DbmPerMHz)) ==
          doctest::Approx(-100.655462488490691).epsilon(1e-12));
    CHECK(units::watts_to_dbm(noise_power(1.0, -174.0, DensityUnits::DbmPerHz)) == doctest::Approx(-174.0).epsilon(1e-14));
    CHECK(parse_density_units("dBm/Hz") == DensityUnits::DbmPerHz);
    CHECK(parse_density_units("dBm/MHz") == DensityUnits::DbmPerMHz);
    CHECK_THROWS(parse_density_units("dBW/Hz"));

    SystemParams p;
    Rng rng(14);
    for (int i = 0; i < 1000; ++i) {
        p.cell_bandwidth_hz = rng.uniform(1e3, 1e6);
        p.cell_noise_density = rng.uniform(-180, -150);
        p.mmwave_bandwidth_hz = rng.uniform(1e8, 5e9);
        p.mmwave_noise_density = rng.uniform(-140, -110);
        CHECK(reference::close_rel(noise_power(p.cell_bandwidth_hz, p.cell_noise_density, DensityUnits::DbmPerHz),
                                   reference::cell_noise_w(p)));
        CHECK(reference::close_rel(noise_power(p.mmwave_bandwidth_hz, p.mmwave_noise_density, DensityUnits::DbmPerMHz),
                                   reference::mmwave_noise_w(p)));
    }
}

TEST_CASE("blockage probability")
{
    CHECK(blockage_probability(0.0, 0.01) == 0.0);
    CHECK(blockage_probability(10.0, 0.01) == doctest::Approx(0.0951625819640404268).epsilon(1e-14));
    CHECK(blockage_probability(123.0, 0.0) == 0.0);
    CHECK_THROWS(blockage_probability(-1.0, 0.01));
    CHECK_THROWS(blockage_probability(1.0, -0.01));

    Rng rng(15);
    double prev = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        const double beta = rng.uniform(0.0, 0.2);
        const double l = rng.uniform(0.0, 20.0);
        CHECK(reference::close_rel(blockage_probability(l, beta), reference::outage(l, beta), 1e-9));
        const double mono = blockage_probability(i * 0.1, 0.01);
        CHECK(mono > prev);
        prev = mono;
    }
}

TEST_CASE("link budget")
{
    LinkBudget b = make_link_budget(1e-9, 1e-10, 1e-10);
    CHECK(b.sinr == doctest::Approx(5.0));
    CHECK_THROWS(make_link_budget(1e-9, 0.0, 0.0));
}

TEST_CASE("channel model tables agree with the oracle")
{
    for (FadingMode mode : {FadingMode::AverageChannel, FadingMode::SampledRayleigh}) {
        SystemParams p;
        p.num_cellular = 4;
        p.num_d2d = 7;
        p.fading_mode = mode;
        p.rng_seed = 5;
        Scenario s = generate_scenario(p);
        ChannelModel m(s, p);
        reference::Fading h{s, s.num_d2d()};
        const double n = p.pathloss_exponent;
        for (std::size_t c = 0; c < 4; ++c) {
            CHECK(reference::close_rel(m.cellular_uplink(c),
                                       reference::cellular_power_w(23, 0.5, 14, reference::dist(s.cellular_positions[c], s.bs_position), n, h.cell_bs(c))));
            for (std::size_t d = 0; d < 7; ++d) {
                CHECK(reference::close_rel(m.cellular_to_d2d(c, d),
                                           reference::cellular_power_w(23, 0.5, 0.5, reference::dist(s.cellular_positions[c], s.d2d_rx_positions[d]), n, h.cell_rx(c, d))));
            }
        }
        for (std::size_t d = 0; d < 7; ++d) {
            CHECK(reference::close_rel(m.d2d_to_bs(d),
                                       reference::cellular_power_w(23, 0.5, 14, reference::dist(s.d2d_tx_positions[d], s.bs_position), n, h.d2d_bs(d))));
            CHECK(reference::close_rel(m.outage(d), reference::outage(reference::dist(s.d2d_tx_positions[d], s.d2d_rx_positions[d]), 0.01)));
            for (std::size_t v = 0; v < 7; ++v) {
                CHECK(reference::close_rel(m.cellular_d2d(d, v),
                                           reference::cellular_power_w(23, 0.5, 0.5, reference::dist(s.d2d_tx_positions[d], s.d2d_rx_positions[v]), n, h.d2d_rx(d, v))));
                CHECK(reference::close_rel(m.mmwave(d, v), reference::mmwave_power_w(s, p, v, d)));
            }
        }
        CHECK(reference::close_rel(m.cell_noise(), reference::cell_noise_w(p)));
        CHECK(reference::close_rel(m.mmwave_noise(), reference::mmwave_noise_w(p)));
    }
}
