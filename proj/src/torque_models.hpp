#pragma once

#include <vector>

namespace jamstring {

// Coulomb friction of a contact surface pair.
struct Material {
  double mu = 0.0;  // dimensionless friction coefficient, >= 0

  void validate() const;
};

// One bead joint: a single conical contact surface.
struct BeadParams {
  double contact_radius_m = 0.0;      // effective radius of the fitting hollow
  double cone_apex_angle_deg = 70.0;  // full apex angle of the wire route cone
  Material material;

  void validate() const;
};

// One comb joint: thin plates laminated along the chain axis. A pulley turns
// wire tension into a normal load pressing the plate stack together.
struct CombParams {
  double plate_radius_m = 0.0;
  int plate_count = 1;  // a
  double plate_thickness_m = 0.0;
  double clearance_m = 0.0;          // gap between adjacent plates
  double training_angle_deg = 45.0;  // wire training angle; wire wraps 2x this
  Material material;

  // A stack of a plates slides on 2a-1 plate/plate and plate/wall surfaces.
  int contact_surface_count() const { return 2 * plate_count - 1; }
  double wrap_angle_deg() const { return 2.0 * training_angle_deg; }

  void validate() const;
};

// One radial-layer joint: concentric thin cylinders with radial clearance.
struct RadialParams {
  double outer_radius_m = 0.0;
  int layer_count = 1;
  double wall_thickness_m = 0.0;
  double clearance_m = 0.0;  // radial gap between adjacent cylinders
  Material material;

  void validate() const;
};

// Holding torque of one bead joint: mu * R * T.
double bead_holding_torque(const BeadParams& params, double tension_N);

// Holding torque of one flat annular contact surface under uniform pressure:
// (2/3) * mu * F_n * R. This is the value of the disc integral
// int_0^{2pi} int_0^R mu * (F_n / (pi R^2)) * r^2 dr dtheta.
double disc_friction_torque(double mu, double normal_load_N, double radius_m);

// Midpoint-rule evaluation of the same double integral on a
// radial_cells x angular_cells grid. Converges to disc_friction_torque.
double disc_friction_torque_numeric(double mu, double normal_load_N,
                                    double radius_m, int radial_cells,
                                    int angular_cells);

// Holding torque of one comb joint: (2a-1) disc surfaces under normal load.
double comb_holding_torque(const CombParams& params, double normal_load_N);

// Resultant of two equal tension vectors on an ideal frictionless pulley:
// 2 * T * sin(wrap/2). wrap_angle_deg must lie in [0, 180].
double normal_load_from_tension(double tension_N, double wrap_angle_deg);

// Contact radii of the concentric cylinders, outermost first:
// R_i = outer_radius - i * (wall_thickness + clearance), i = 0..layer_count-1.
std::vector<double> layer_radii(const RadialParams& params);

// Holding torque of one radial-layer joint: sum_i mu * R_i * T.
double radial_holding_torque(const RadialParams& params, double tension_N);

}  // namespace jamstring
