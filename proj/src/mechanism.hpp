#pragma once

#include <string>
#include <variant>

#include "torque_models.hpp"

namespace jamstring {

// Per-joint tension retention defaults. The comb chain loses 6% per joint to
// rolling friction at its pulleys; the bead and radial chains lose a quarter
// and half of that rate.
inline constexpr double kBeadDefaultRetention = 0.985;
inline constexpr double kCombDefaultRetention = 0.94;
inline constexpr double kRadialDefaultRetention = 0.97;

// Prototype inter-axial distances (m).
inline constexpr double kBeadDefaultInterAxial = 0.006;
inline constexpr double kCombDefaultInterAxial = 0.030;
inline constexpr double kRadialDefaultInterAxial = 0.0091;

// Default lever arm from joint center to the pushed end of the chain (m).
inline constexpr double kDefaultLeverArm = 0.122;

// One joint design: family geometry plus the chain-level behaviour knobs.
struct Mechanism {
  std::string name;  // optional label; defaults to the family tag
  std::variant<BeadParams, CombParams, RadialParams> params;
  double retention_k = 1.0;           // per-joint tension retention, (0, 1]
  double engagement_tension_N = 0.0;  // tension below which no torque appears
  double inter_axial_m = 0.0;         // pivot-to-pivot spacing

  const char* family() const;

  // Holding torque of a single joint seeing local tension tension_N.
  // Engagement shifts the line: torque = slope * max(0, T - T_engage).
  double torque_at_tension(double tension_N) const;

  // d(torque)/d(tension) past the engagement threshold.
  double torque_slope() const { return material().mu * slope_factor(); }

  // torque_slope with mu factored out; the calibration divisor.
  double slope_factor() const;

  double width_m() const;  // overall part diameter
  int part_count() const;  // plates / layers; 1 for bead

  // Material cross-section area (m^2); a relative part-weight proxy.
  double cross_section_area_m2() const;

  const Material& material() const;
  void set_mu(double mu);

  std::string display_name() const {
    return name.empty() ? std::string(family()) : name;
  }

  void validate() const;
};

Mechanism make_bead(const BeadParams& params);
Mechanism make_comb(const CombParams& params);
Mechanism make_radial(const RadialParams& params);

// The three prototype parameterizations with effective friction coefficients
// fitted to the measured fourth-joint holding torques at 50 N tension.
Mechanism preset_bead();
Mechanism preset_comb();
Mechanism preset_radial();
Mechanism preset_mechanism(const std::string& family);

}  // namespace jamstring
