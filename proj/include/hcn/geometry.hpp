#pragma once

namespace hcn {

struct Point {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point&) const = default;
};

/// A directed radio link; each end points its boresight at the other.
struct Link {
    Point tx;
    Point rx;
};

/// Euclidean distance in meters.
double distance(Point a, Point b);

/// Angle in degrees, in [0, 180], between two nonzero direction vectors.
/// Throws InvalidScenario if either vector has zero length.
double angle_between_deg(Point u, Point v);

struct BoresightAngles {
    double tx_deg = 0.0;  // at the interferer's transmitter
    double rx_deg = 0.0;  // at the victim's receiver
};

/// Off-boresight angles seen by an interfering transmission.
///
/// tx_deg is measured at interferer.tx between its boresight (towards
/// interferer.rx) and the direction of victim.rx. rx_deg is measured at
/// victim.rx between its boresight (towards victim.tx) and the direction of
/// interferer.tx. Passing the same link twice gives (0, 0).
///
/// Throws InvalidScenario for zero-length links or coincident endpoints.
BoresightAngles off_boresight_angles(const Link& interferer, const Link& victim);

}  // namespace hcn
