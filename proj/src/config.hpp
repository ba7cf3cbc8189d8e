#pragma once

#include <string>

#include "experiments.hpp"
#include "explorer.hpp"
#include "mechanism.hpp"

namespace jamstring {

// Mechanism config document (JSON). Top-level keys:
//   mechanism: "bead" | "comb" | "radial"          (required)
//   units: "si" | "mm"                             (required; scales lengths)
//   mu: number                                     (required)
//   family geometry fields                         (required per family)
//     bead:   contact_radius, cone_apex_angle_deg
//     comb:   plate_radius, plate_count, plate_thickness, clearance,
//             training_angle_deg
//     radial: outer_radius, layer_count, wall_thickness, clearance
//   inter_axial_distance: number                   (optional; family default)
//   attenuation: {"k": number}                     (optional; family default)
//   engagement_tension_N: number                   (optional; default 0)
//   name: string, notes: object of strings         (optional, informative)
// Angles are always degrees; engagement tension is always newtons; other
// lengths follow the units key. Unknown keys are rejected and all model
// invariants are re-validated after conversion.
Mechanism mechanism_from_json(const std::string& json_text);
Mechanism load_mechanism_file(const std::string& path);

// Sweep spec document (JSON, SI units throughout):
//   mechanism: family tag                          (required)
//   joint_count: int, root_tension_N: number       (required)
//   inter_axial_m, lever_arm_m: number             (optional)
//   grid_cap: int                                  (optional, default 1e6)
//   fixed: {axis: number}                          (optional)
//   ranges: {axis: {"min": a, "max": b, "steps": n}}
// Axis keys: radius_m, count, thickness_m, clearance_m, mu, retention_k.
SweepSpec sweep_spec_from_json(const std::string& json_text);

// Requirement document (JSON): min_tip_torque_Nm, max_width_m, joint_count,
// max_tension_N, all required.
Requirement requirement_from_json(const std::string& json_text);

std::string recommendation_to_json(const Recommendation& rec);

struct CalibrationReport {
  std::string mechanism;
  int record_count = 0;
  AffineFit free_intercept;
  AffineFit through_origin;
  double mu_free_intercept = 0.0;
  double mu_through_origin = 0.0;
};

std::string calibration_report_to_json(const CalibrationReport& report);

}  // namespace jamstring
