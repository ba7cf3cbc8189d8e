#include "mechanism.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "units.hpp"

namespace jamstring {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

const char* Mechanism::family() const {
  return std::visit(overloaded{[](const BeadParams&) { return "bead"; },
                               [](const CombParams&) { return "comb"; },
                               [](const RadialParams&) { return "radial"; }},
                    params);
}

double Mechanism::torque_at_tension(double tension_N) const {
  require(tension_N >= 0.0, errc::domain, "tension must be >= 0");
  const double t = std::max(0.0, tension_N - engagement_tension_N);
  return std::visit(
      overloaded{
          [&](const BeadParams& p) { return bead_holding_torque(p, t); },
          [&](const CombParams& p) {
            return comb_holding_torque(
                p, normal_load_from_tension(t, p.wrap_angle_deg()));
          },
          [&](const RadialParams& p) { return radial_holding_torque(p, t); }},
      params);
}

double Mechanism::slope_factor() const {
  return std::visit(
      overloaded{[](const BeadParams& p) { return p.contact_radius_m; },
                 [](const CombParams& p) {
                   const double load_per_tension =
                       2.0 * std::sin(deg_to_rad(p.wrap_angle_deg()) / 2.0);
                   return p.contact_surface_count() * (2.0 / 3.0) *
                          p.plate_radius_m * load_per_tension;
                 },
                 [](const RadialParams& p) {
                   double sum = 0.0;
                   for (double r : layer_radii(p)) sum += r;
                   return sum;
                 }},
      params);
}

double Mechanism::width_m() const {
  return std::visit(
      overloaded{
          [](const BeadParams& p) { return 2.0 * p.contact_radius_m; },
          [](const CombParams& p) { return 2.0 * p.plate_radius_m; },
          [](const RadialParams& p) { return 2.0 * p.outer_radius_m; }},
      params);
}

int Mechanism::part_count() const {
  return std::visit(overloaded{[](const BeadParams&) { return 1; },
                               [](const CombParams& p) { return p.plate_count; },
                               [](const RadialParams& p) { return p.layer_count; }},
                    params);
}

double Mechanism::cross_section_area_m2() const {
  return std::visit(
      overloaded{[](const BeadParams& p) {
                   return kPi * p.contact_radius_m * p.contact_radius_m;
                 },
                 [](const CombParams& p) {
                   return p.plate_count * kPi * p.plate_radius_m *
                          p.plate_radius_m;
                 },
                 [](const RadialParams& p) {
                   double area = 0.0;
                   for (double r : layer_radii(p)) {
                     const double inner = r - p.wall_thickness_m;
                     area += kPi * (r * r - inner * inner);
                   }
                   return area;
                 }},
      params);
}

const Material& Mechanism::material() const {
  return std::visit(
      [](const auto& p) -> const Material& { return p.material; }, params);
}

void Mechanism::set_mu(double mu) {
  Material m{mu};
  m.validate();
  std::visit([&](auto& p) { p.material = m; }, params);
}

void Mechanism::validate() const {
  std::visit([](const auto& p) { p.validate(); }, params);
  require(retention_k > 0.0 && retention_k <= 1.0, errc::domain,
          "retention k must lie in (0, 1]");
  require(engagement_tension_N >= 0.0, errc::domain,
          "engagement tension must be >= 0");
  require(inter_axial_m > 0.0, errc::domain,
          "inter_axial_distance must be > 0");
}

Mechanism make_bead(const BeadParams& params) {
  Mechanism m;
  m.params = params;
  m.retention_k = kBeadDefaultRetention;
  m.inter_axial_m = kBeadDefaultInterAxial;
  return m;
}

Mechanism make_comb(const CombParams& params) {
  Mechanism m;
  m.params = params;
  m.retention_k = kCombDefaultRetention;
  m.inter_axial_m = kCombDefaultInterAxial;
  return m;
}

Mechanism make_radial(const RadialParams& params) {
  Mechanism m;
  m.params = params;
  m.retention_k = kRadialDefaultRetention;
  m.inter_axial_m = kRadialDefaultInterAxial;
  return m;
}

Mechanism preset_bead() {
  BeadParams p;
  p.contact_radius_m = 0.006;  // half of the 12.0 mm part width
  p.cone_apex_angle_deg = 70.0;
  p.material.mu = 0.13 / (50.0 * 0.006);  // fitted to 0.13 N*m at 50 N
  Mechanism m = make_bead(p);
  m.name = "bead-prototype";
  return m;
}

Mechanism preset_comb() {
  CombParams p;
  p.plate_radius_m = 0.006;
  p.plate_count = 5;
  p.plate_thickness_m = 0.0011;
  p.clearance_m = 0.00112;
  p.training_angle_deg = 45.0;
  Mechanism m = make_comb(p);
  // fitted to 0.20 N*m at 50 N
  m.set_mu((0.20 / 50.0) / m.slope_factor());
  m.name = "comb-prototype";
  return m;
}

Mechanism preset_radial() {
  RadialParams p;
  p.outer_radius_m = 0.0075;  // half of the 15.0 mm part width
  p.layer_count = 3;
  p.wall_thickness_m = 0.0009;
  p.clearance_m = 0.00105;
  Mechanism m = make_radial(p);
  // fitted to 0.39 N*m at 50 N
  m.set_mu((0.39 / 50.0) / m.slope_factor());
  m.name = "radial-prototype";
  return m;
}

Mechanism preset_mechanism(const std::string& family) {
  if (family == "bead") return preset_bead();
  if (family == "comb") return preset_comb();
  if (family == "radial") return preset_radial();
  throw Error(errc::parse, "unknown mechanism family '" + family + "'");
}

}  // namespace jamstring
