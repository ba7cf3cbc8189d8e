#pragma once

#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mechanism.hpp"
#include "tension.hpp"

namespace jamstring {

struct MeasurementRecord {
  std::string mechanism_id;  // optional tag
  int joint_index = 1;
  double tension_N = 0.0;  // wire tension at the measured joint
  double torque_Nm = 0.0;  // peak holding torque
};

struct MeasurementSet {
  std::vector<MeasurementRecord> records;
  double lever_arm_m = kDefaultLeverArm;
  double push_distance_m = 0.015;
  double push_velocity_mm_min = 10.0;
};

// Parses the measurement CSV schema: required columns tension_N and
// torque_Nm, optional mechanism and joint_index, any column order, no other
// columns. Rejects the whole stream with one errc::ingestion error listing
// every offending line.
MeasurementSet load_measurements(std::istream& in);
MeasurementSet load_measurements_file(const std::string& path);

// Records tagged with mechanism_id plus all untagged records. Throws
// errc::ingestion when nothing is left for that mechanism.
MeasurementSet select_mechanism(const MeasurementSet& set,
                                const std::string& mechanism_id);

struct AffineFit {
  double slope_Nm_per_N = 0.0;
  double intercept_Nm = 0.0;
  double r_squared = 0.0;
  double engagement_tension_N = 0.0;  // -intercept/slope when intercept < 0
  bool through_origin = false;
};

// Ordinary least squares over (tension, torque) points. Needs at least two
// distinct tension values. through_origin forces the intercept to zero and
// reports the uncentered r^2.
AffineFit fit_affine(std::span<const double> tension_N,
                     std::span<const double> torque_Nm,
                     bool through_origin = false);
AffineFit fit_affine(const MeasurementSet& set, bool through_origin = false);

// Friction coefficient that reproduces the fitted torque-vs-tension slope
// for this geometry: mu = slope / slope_factor. Slope must be positive.
double calibrate_mu(const Mechanism& mech, const AffineFit& fit);

// Calibration against a single measured joint of a chain driven at
// root_tension_N: the joint sees the decayed local tension, so
// mu = torque / (local_tension * slope_factor). Re-simulating the chain then
// reproduces the measured torque at that joint.
double calibrate_mu_from_anchor(const Mechanism& mech, int joint_index,
                                double root_tension_N, double torque_Nm);

// Experiment (i): per-joint holding torque profiles for each mechanism on
// the same chain (root tension applied by the regulator, joints measured
// one by one).
std::vector<TorqueProfile> simulate_experiment_i(
    std::span<const Mechanism> mechs, const ChainConfig& chain);

// Experiment (ii): first-joint holding torque over a tension grid.
using TensionTorqueSeries = std::vector<std::pair<double, double>>;
std::vector<TensionTorqueSeries> simulate_experiment_ii(
    std::span<const Mechanism> mechs, std::span<const double> tension_grid_N);

}  // namespace jamstring
