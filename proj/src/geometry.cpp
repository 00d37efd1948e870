#include "hcn/geometry.hpp"

#include <cmath>

#include "hcn/errors.hpp"
#include "hcn/units.hpp"

namespace hcn {

double distance(Point a, Point b)
{
    return std::hypot(b.x - a.x, b.y - a.y);
}

double angle_between_deg(Point u, Point v)
{
    if ((u.x == 0.0 && u.y == 0.0) || (v.x == 0.0 && v.y == 0.0)) {
        throw InvalidScenario("off-boresight angle undefined for a zero-length direction");
    }
    // atan2 of |cross| and dot stays accurate near 0 and 180 degrees, where
    // acos of a normalized dot product loses half its digits.
    const double cross = u.x * v.y - u.y * v.x;
    const double dot = u.x * v.x + u.y * v.y;
    return units::rad_to_deg(std::atan2(std::abs(cross), dot));
}

BoresightAngles off_boresight_angles(const Link& interferer, const Link& victim)
{
    if (interferer.tx == interferer.rx || victim.tx == victim.rx) {
        throw InvalidScenario("degenerate zero-length link");
    }
    const Point tx_boresight{interferer.rx.x - interferer.tx.x, interferer.rx.y - interferer.tx.y};
    const Point tx_to_victim{victim.rx.x - interferer.tx.x, victim.rx.y - interferer.tx.y};
    const Point rx_boresight{victim.tx.x - victim.rx.x, victim.tx.y - victim.rx.y};
    const Point rx_to_source{interferer.tx.x - victim.rx.x, interferer.tx.y - victim.rx.y};
    return {angle_between_deg(tx_boresight, tx_to_victim),
            angle_between_deg(rx_boresight, rx_to_source)};
}

}  // namespace hcn
