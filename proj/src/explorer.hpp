#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mechanism.hpp"
#include "tension.hpp"

namespace jamstring {

struct ParamRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 1;  // steps == 1 takes min
};

// Grid sweep over one mechanism family. Axis keys: radius_m, count,
// thickness_m, clearance_m, mu, retention_k. Unswept axes take the family
// preset value unless overridden in fixed. Records come out in lexicographic
// grid order with the last axis varying fastest.
struct SweepSpec {
  std::string family;
  ChainConfig chain;
  std::map<std::string, ParamRange> ranges;
  std::map<std::string, double> fixed;
  std::size_t grid_cap = 1'000'000;
};

struct DesignRecord {
  std::string family;
  double radius_m = 0.0;
  int count = 1;
  double thickness_m = 0.0;  // 0 when not applicable (bead)
  double clearance_m = 0.0;  // 0 when not applicable (bead)
  double mu = 0.0;
  double retention_k = 1.0;
  bool feasible = true;
  double root_torque_Nm = 0.0;
  double tip_torque_Nm = 0.0;  // at the last joint of the chain
  double width_m = 0.0;
  double weight_proxy = 0.0;  // material cross-section area, m^2
};

// Cartesian-product evaluation. Geometrically invalid points are kept as
// infeasible records. Throws errc::cap_exceeded when the grid is larger than
// spec.grid_cap.
std::vector<DesignRecord> run_sweep(const SweepSpec& spec);

enum class Direction { minimize, maximize };

struct Objective {
  std::string field;
  Direction direction = Direction::maximize;
};

// Parses "tip_torque_Nm:max,width_m:min".
std::vector<Objective> parse_objectives(const std::string& text);

// Non-dominated subset of the feasible records, in input order.
std::vector<DesignRecord> pareto_front(std::span<const DesignRecord> records,
                                       std::span<const Objective> objectives);

struct Requirement {
  double min_tip_torque_Nm = 0.0;
  double max_width_m = 0.0;
  int joint_count = 1;
  double max_tension_N = 0.0;

  void validate() const;
};

struct RankedDesign {
  Mechanism mech;
  TorqueProfile profile;
  double tip_torque_Nm = 0.0;
  double margin_Nm = 0.0;  // tip torque above the requirement
  double width_m = 0.0;
};

struct InfeasibleDesign {
  std::string mechanism;
  std::string binding_constraint;  // min_tip_torque and/or max_width
  double tip_torque_Nm = 0.0;
  double width_m = 0.0;
};

struct Recommendation {
  Requirement requirement;
  std::vector<RankedDesign> ranked;
  std::vector<InfeasibleDesign> infeasible;
};

// Evaluates each candidate on a joint_count chain at max_tension and ranks
// the feasible ones by tip torque, then smaller width, then fewer parts.
// Infeasible candidates are reported with the constraint that excluded them.
Recommendation recommend(const Requirement& requirement,
                         std::span<const Mechanism> candidates);

// Design record CSV schema (fixed column order, byte-stable output).
std::string records_to_csv(std::span<const DesignRecord> records);
std::vector<DesignRecord> records_from_csv(const std::string& text);

}  // namespace jamstring
