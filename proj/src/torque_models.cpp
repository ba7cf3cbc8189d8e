#include "torque_models.hpp"

#include <cmath>

#include "error.hpp"
#include "units.hpp"

namespace jamstring {

void Material::validate() const {
  require(mu >= 0.0 && std::isfinite(mu), errc::domain,
          "friction coefficient mu must be >= 0");
}

void BeadParams::validate() const {
  material.validate();
  require(contact_radius_m > 0.0, errc::domain,
          "bead contact_radius must be > 0");
  require(cone_apex_angle_deg > 0.0 && cone_apex_angle_deg < 180.0,
          errc::domain, "bead cone_apex_angle must lie in (0, 180) deg");
}

void CombParams::validate() const {
  material.validate();
  require(plate_radius_m > 0.0, errc::domain, "comb plate_radius must be > 0");
  require(plate_count >= 1, errc::domain, "comb plate_count must be >= 1");
  require(plate_thickness_m > 0.0, errc::domain,
          "comb plate_thickness must be > 0");
  require(clearance_m > 0.0, errc::domain, "comb clearance must be > 0");
  require(training_angle_deg > 0.0 && training_angle_deg < 90.0, errc::domain,
          "comb training_angle must lie in (0, 90) deg");
}

void RadialParams::validate() const {
  material.validate();
  require(outer_radius_m > 0.0, errc::domain,
          "radial outer_radius must be > 0");
  require(layer_count >= 1, errc::domain, "radial layer_count must be >= 1");
  require(wall_thickness_m > 0.0, errc::domain,
          "radial wall_thickness must be > 0");
  require(clearance_m > 0.0, errc::domain, "radial clearance must be > 0");
  // Innermost cylinder must keep a positive inner radius.
  require(outer_radius_m >
              layer_count * (wall_thickness_m + clearance_m) - clearance_m,
          errc::domain,
          "radial outer_radius too small: innermost layer radius would be "
          "non-positive");
}

double bead_holding_torque(const BeadParams& params, double tension_N) {
  params.validate();
  require(tension_N >= 0.0, errc::domain, "tension must be >= 0");
  return params.material.mu * params.contact_radius_m * tension_N;
}

double disc_friction_torque(double mu, double normal_load_N, double radius_m) {
  require(mu >= 0.0, errc::domain, "mu must be >= 0");
  require(normal_load_N >= 0.0, errc::domain, "normal load must be >= 0");
  require(radius_m >= 0.0, errc::domain, "radius must be >= 0");
  return (2.0 / 3.0) * mu * normal_load_N * radius_m;
}

double disc_friction_torque_numeric(double mu, double normal_load_N,
                                    double radius_m, int radial_cells,
                                    int angular_cells) {
  require(mu >= 0.0, errc::domain, "mu must be >= 0");
  require(normal_load_N >= 0.0, errc::domain, "normal load must be >= 0");
  require(radius_m >= 0.0, errc::domain, "radius must be >= 0");
  require(radial_cells >= 1 && angular_cells >= 1, errc::domain,
          "quadrature cell counts must be >= 1");
  if (radius_m == 0.0) return 0.0;

  const double dr = radius_m / radial_cells;
  const double dtheta = 2.0 * kPi / angular_cells;
  const double pressure = normal_load_N / (kPi * radius_m * radius_m);

  double acc = 0.0;
  for (int j = 0; j < angular_cells; ++j) {
    for (int i = 0; i < radial_cells; ++i) {
      const double r = (i + 0.5) * dr;
      acc += r * r * dr * dtheta;
    }
  }
  return mu * pressure * acc;
}

double comb_holding_torque(const CombParams& params, double normal_load_N) {
  params.validate();
  require(normal_load_N >= 0.0, errc::domain, "normal load must be >= 0");
  return params.contact_surface_count() *
         disc_friction_torque(params.material.mu, normal_load_N,
                              params.plate_radius_m);
}

double normal_load_from_tension(double tension_N, double wrap_angle_deg) {
  require(tension_N >= 0.0, errc::domain, "tension must be >= 0");
  require(wrap_angle_deg >= 0.0 && wrap_angle_deg <= 180.0, errc::domain,
          "wrap angle must lie in [0, 180] deg");
  return 2.0 * tension_N * std::sin(deg_to_rad(wrap_angle_deg) / 2.0);
}

std::vector<double> layer_radii(const RadialParams& params) {
  params.validate();
  std::vector<double> radii;
  radii.reserve(params.layer_count);
  const double step = params.wall_thickness_m + params.clearance_m;
  for (int i = 0; i < params.layer_count; ++i) {
    const double r = params.outer_radius_m - i * step;
    require(r > 0.0, errc::domain, "radial layer radius must stay positive");
    radii.push_back(r);
  }
  return radii;
}

double radial_holding_torque(const RadialParams& params, double tension_N) {
  require(tension_N >= 0.0, errc::domain, "tension must be >= 0");
  double torque = 0.0;
  for (double r : layer_radii(params)) {
    torque += params.material.mu * r * tension_N;
  }
  return torque;
}

}  // namespace jamstring
