#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mechanism.hpp"
#include "tension.hpp"

namespace jamstring {

struct Point2 {
  double x_m = 0.0;
  double y_m = 0.0;
};

// How the wire is routed through the parts.
//
// conical_pivot: the wire is constrained exactly at the joint pivot centers
// (cone apexes sit on the pivots), so the route is a polyline over the
// pivots and its length never changes with bending.
//
// through_hole_straight: a plain through-hole constrains the wire only at
// each part's hole midpoint; the route cuts every corner and shortens as the
// chain bends, which is why that construction cannot hold a curved shape.
enum class WireRoute {
  conical_pivot,
  through_hole_straight,
};

WireRoute wire_route_from_string(const std::string& name);

// Planar pose of the chain under cumulative joint rotations. Returns
// joint_count + 1 points: the joint pivot centers followed by the tip. The
// first joint angle orients the chain relative to its base; consecutive
// points are exactly inter_axial_m apart.
std::vector<Point2> chain_pose(const ChainConfig& chain,
                               std::span<const double> angles_deg);

// Length of the wire route for the posed chain. When max_abs_angle_deg is
// given, any joint bent beyond it is a domain error naming the joint.
double wire_path_length(const ChainConfig& chain,
                        std::span<const double> angles_deg, WireRoute route,
                        std::optional<double> max_abs_angle_deg = {});

// Range of motion of one joint, per bending side. Beads bend until the wire
// meets the cone wall (half the apex angle); comb and radial joints bend
// until the clearance closes against the contact radius.
double max_joint_angle_deg(const Mechanism& mech);

// CSV with header joint_index,x_m,y_m; the tip is the last row.
std::string pose_to_csv(std::span<const Point2> points);

}  // namespace jamstring
