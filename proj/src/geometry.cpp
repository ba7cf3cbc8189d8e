#include "geometry.hpp"

#include <cmath>

#include "csv.hpp"
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

double polyline_length(std::span<const Point2> points) {
  double length = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    length += std::hypot(points[i + 1].x_m - points[i].x_m,
                         points[i + 1].y_m - points[i].y_m);
  }
  return length;
}

}  // namespace

WireRoute wire_route_from_string(const std::string& name) {
  if (name == "conical" || name == "conical_pivot") {
    return WireRoute::conical_pivot;
  }
  if (name == "straight" || name == "through_hole_straight") {
    return WireRoute::through_hole_straight;
  }
  throw Error(errc::parse, "unknown wire route '" + name +
                               "' (expected conical or straight)");
}

std::vector<Point2> chain_pose(const ChainConfig& chain,
                               std::span<const double> angles_deg) {
  chain.validate();
  require(static_cast<int>(angles_deg.size()) == chain.joint_count,
          errc::domain, "angle count must equal joint_count");
  std::vector<Point2> points;
  points.reserve(chain.joint_count + 1);
  points.push_back({0.0, 0.0});
  double heading_rad = 0.0;
  double x = 0.0;
  double y = 0.0;
  for (int j = 0; j < chain.joint_count; ++j) {
    heading_rad += deg_to_rad(angles_deg[j]);
    x += chain.inter_axial_m * std::cos(heading_rad);
    y += chain.inter_axial_m * std::sin(heading_rad);
    points.push_back({x, y});
  }
  return points;
}

double wire_path_length(const ChainConfig& chain,
                        std::span<const double> angles_deg, WireRoute route,
                        std::optional<double> max_abs_angle_deg) {
  if (max_abs_angle_deg) {
    for (std::size_t j = 0; j < angles_deg.size(); ++j) {
      require(std::abs(angles_deg[j]) <= *max_abs_angle_deg, errc::domain,
              "joint " + std::to_string(j + 1) + " angle " +
                  format_double(angles_deg[j]) + " deg exceeds the range of "
                  "motion (" + format_double(*max_abs_angle_deg) + " deg)");
    }
  }
  const std::vector<Point2> pivots = chain_pose(chain, angles_deg);
  switch (route) {
    case WireRoute::conical_pivot:
      return polyline_length(pivots);
    case WireRoute::through_hole_straight: {
      // Waypoints: root pivot, each part's hole midpoint, tip.
      std::vector<Point2> waypoints;
      waypoints.reserve(pivots.size() + 1);
      waypoints.push_back(pivots.front());
      for (std::size_t i = 0; i + 1 < pivots.size(); ++i) {
        waypoints.push_back({0.5 * (pivots[i].x_m + pivots[i + 1].x_m),
                             0.5 * (pivots[i].y_m + pivots[i + 1].y_m)});
      }
      waypoints.push_back(pivots.back());
      return polyline_length(waypoints);
    }
  }
  throw Error(errc::domain, "unknown wire route");
}

double max_joint_angle_deg(const Mechanism& mech) {
  return std::visit(
      overloaded{[](const BeadParams& p) { return 0.5 * p.cone_apex_angle_deg; },
                 [](const CombParams& p) {
                   return rad_to_deg(
                       std::atan(p.clearance_m / p.plate_radius_m));
                 },
                 [](const RadialParams& p) {
                   return rad_to_deg(
                       std::atan(p.clearance_m / p.outer_radius_m));
                 }},
      mech.params);
}

std::string pose_to_csv(std::span<const Point2> points) {
  std::string out = "joint_index,x_m,y_m\n";
  for (std::size_t i = 0; i < points.size(); ++i) {
    out += std::to_string(i + 1);
    out += ',';
    out += format_double(points[i].x_m);
    out += ',';
    out += format_double(points[i].y_m);
    out += '\n';
  }
  return out;
}

}  // namespace jamstring
