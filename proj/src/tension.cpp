#include "tension.hpp"

#include <cmath>

#include "csv.hpp"
#include "error.hpp"

namespace jamstring {

void AttenuationModel::validate() const {
  require(retention_per_joint > 0.0 && retention_per_joint <= 1.0,
          errc::domain, "retention k must lie in (0, 1]");
}

void ChainConfig::validate() const {
  require(joint_count >= 1, errc::domain, "joint_count must be >= 1");
  require(inter_axial_m > 0.0, errc::domain,
          "inter_axial_distance must be > 0");
  require(lever_arm_m > 0.0, errc::domain, "lever_arm must be > 0");
  require(root_tension_N >= 0.0, errc::domain, "root tension must be >= 0");
}

void TorqueProfile::validate() const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require(entries[i].joint_index == static_cast<int>(i) + 1, errc::domain,
            "profile joint indices must be contiguous from 1");
    require(entries[i].torque_Nm >= 0.0, errc::domain,
            "profile torques must be >= 0");
  }
}

double joint_tension(double root_tension_N, const AttenuationModel& model,
                     int joint_index) {
  model.validate();
  require(root_tension_N >= 0.0, errc::domain, "root tension must be >= 0");
  require(joint_index >= 1, errc::domain, "joint_index must be >= 1");
  double t = root_tension_N;
  for (int i = 1; i < joint_index; ++i) t *= model.retention_per_joint;
  return t;
}

TorqueProfile tip_torque_profile(const Mechanism& mech,
                                 const ChainConfig& chain,
                                 const AttenuationModel& model) {
  mech.validate();
  chain.validate();
  model.validate();
  TorqueProfile profile;
  profile.mechanism_id = mech.display_name();
  profile.entries.reserve(chain.joint_count);
  double tension = chain.root_tension_N;
  for (int j = 1; j <= chain.joint_count; ++j) {
    if (j > 1) tension *= model.retention_per_joint;
    profile.entries.push_back({j, tension, mech.torque_at_tension(tension)});
  }
  return profile;
}

TorqueProfile tip_torque_profile(const Mechanism& mech,
                                 const ChainConfig& chain) {
  return tip_torque_profile(mech, chain,
                            AttenuationModel{mech.retention_k});
}

int halving_joint(const AttenuationModel& model) {
  model.validate();
  const double k = model.retention_per_joint;
  require(k < 1.0, errc::no_halving,
          "a lossless chain (k = 1) never halves its tip tension");
  int n = static_cast<int>(std::ceil(std::log(0.5) / std::log(k)));
  n = std::max(n, 1);
  while (n > 1 && std::pow(k, n - 1) <= 0.5) --n;
  while (std::pow(k, n) > 0.5) ++n;
  return n;
}

std::optional<int> crossover_joint(const Mechanism& a, const Mechanism& b,
                                   const ChainConfig& chain) {
  const TorqueProfile pa = tip_torque_profile(a, chain);
  const TorqueProfile pb = tip_torque_profile(b, chain);
  for (std::size_t i = 0; i < pa.entries.size(); ++i) {
    if (pa.entries[i].torque_Nm >= pb.entries[i].torque_Nm) {
      return pa.entries[i].joint_index;
    }
  }
  return std::nullopt;
}

std::string profile_to_csv(const TorqueProfile& profile) {
  std::string out = "joint_index,tension_N,torque_Nm\n";
  for (const ProfileEntry& e : profile.entries) {
    out += std::to_string(e.joint_index);
    out += ',';
    out += format_double(e.tension_N);
    out += ',';
    out += format_double(e.torque_Nm);
    out += '\n';
  }
  return out;
}

}  // namespace jamstring
