#pragma once

#include <cmath>
#include <numbers>

// Every dB <-> linear conversion in the library goes through these helpers so
// that identical inputs round identically everywhere.
namespace hcn::units {

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

inline double linear_to_db(double ratio) { return 10.0 * std::log10(ratio); }

inline double dbm_to_watts(double dbm) { return db_to_linear(dbm - 30.0); }

inline double watts_to_dbm(double watts) { return linear_to_db(watts) + 30.0; }

constexpr double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

constexpr double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace hcn::units
