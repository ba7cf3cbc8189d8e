#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mechanism.hpp"

namespace jamstring {

// Geometric per-joint tension decay. retention_per_joint is the fraction of
// the incoming tension that survives one joint; 1 - k is the per-joint loss.
struct AttenuationModel {
  double retention_per_joint = 1.0;  // k in (0, 1]

  void validate() const;
};

struct ChainConfig {
  int joint_count = 1;
  double inter_axial_m = 0.0;
  double lever_arm_m = kDefaultLeverArm;
  double root_tension_N = 0.0;

  void validate() const;
};

struct ProfileEntry {
  int joint_index;   // 1-based, joint 1 at the chain root
  double tension_N;  // local wire tension at the joint
  double torque_Nm;
};

struct TorqueProfile {
  std::string mechanism_id;
  std::vector<ProfileEntry> entries;

  void validate() const;
};

// Wire tension seen by joint joint_index: root * k^(joint_index - 1).
double joint_tension(double root_tension_N, const AttenuationModel& model,
                     int joint_index);

// Per-joint holding torque along the chain, each joint evaluated at its
// local tension.
TorqueProfile tip_torque_profile(const Mechanism& mech,
                                 const ChainConfig& chain,
                                 const AttenuationModel& model);

// Convenience overload using the mechanism's own retention factor.
TorqueProfile tip_torque_profile(const Mechanism& mech,
                                 const ChainConfig& chain);

// Smallest n >= 1 with k^n <= 1/2. Throws errc::no_halving for k = 1.
int halving_joint(const AttenuationModel& model);

// Smallest joint index where mechanism a's torque is >= mechanism b's, or
// nullopt if b stays ahead over the whole chain.
std::optional<int> crossover_joint(const Mechanism& a, const Mechanism& b,
                                   const ChainConfig& chain);

// CSV with header joint_index,tension_N,torque_Nm.
std::string profile_to_csv(const TorqueProfile& profile);

}  // namespace jamstring
