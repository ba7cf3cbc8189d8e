#pragma once

#include <numbers>

namespace jamstring {

inline constexpr double kPi = std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad_to_deg(double rad) { return rad * 180.0 / kPi; }
constexpr double mm_to_m(double mm) { return mm / 1000.0; }

}  // namespace jamstring
