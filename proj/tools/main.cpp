// jamstring command-line tool. Talks to the library exclusively through the
// C API in jamstring.h; owns argument parsing and file I/O.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jamstring.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;  // infeasible / empty result
constexpr int kExitUsage = 2;  // usage or validation error

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail_usage(const std::string& message) {
  throw CliError{kExitUsage, message};
}

void check(jam_status status) {
  if (status != JAM_OK) {
    fail_usage(std::string(jam_status_name(status)) + ": " + jam_last_error());
  }
}

std::string fmt(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) fail_usage("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) fail_usage("cannot open '" + path + "' for writing");
  out << content;
  if (!out.good()) fail_usage("failed writing '" + path + "'");
}

using MechanismPtr = std::unique_ptr<jam_mechanism, decltype(&jam_mechanism_free)>;
using ChainPtr = std::unique_ptr<jam_chain, decltype(&jam_chain_free)>;
using ProfilePtr = std::unique_ptr<jam_profile, decltype(&jam_profile_free)>;
using MeasurementsPtr =
    std::unique_ptr<jam_measurements, decltype(&jam_measurements_free)>;

MechanismPtr load_mechanism(const std::string& path) {
  jam_mechanism* mech = nullptr;
  check(jam_mechanism_load(path.c_str(), &mech));
  return MechanismPtr(mech, &jam_mechanism_free);
}

ChainPtr make_chain(int joints, double inter_axial_m, double lever_arm_m,
                    double tension_N) {
  jam_chain* chain = nullptr;
  check(jam_chain_create(joints, inter_axial_m, lever_arm_m, tension_N,
                         &chain));
  return ChainPtr(chain, &jam_chain_free);
}

std::string profile_csv(const jam_profile* profile, const char* mechanism) {
  std::string out;
  out += mechanism ? "mechanism,joint_index,tension_N,torque_Nm\n"
                   : "joint_index,tension_N,torque_Nm\n";
  const int32_t n = jam_profile_size(profile);
  for (int32_t i = 0; i < n; ++i) {
    int32_t joint = 0;
    double tension = 0.0;
    double torque = 0.0;
    check(jam_profile_entry(profile, i, &joint, &tension, &torque));
    if (mechanism) {
      out += mechanism;
      out += ',';
    }
    out += std::to_string(joint) + ',' + fmt(tension) + ',' + fmt(torque) +
           '\n';
  }
  return out;
}

int cmd_torque(const std::string& config, double tension) {
  const MechanismPtr mech = load_mechanism(config);
  double torque = 0.0;
  check(jam_mechanism_torque(mech.get(), tension, &torque));
  std::cout << "torque_Nm=" << fmt(torque) << "\n";
  return kExitOk;
}

int cmd_propagate(const std::string& config, int joints, double tension,
                  double lever_arm, const std::string& out_path) {
  const MechanismPtr mech = load_mechanism(config);
  double inter_axial = 0.0;
  check(jam_mechanism_inter_axial(mech.get(), &inter_axial));
  const ChainPtr chain = make_chain(joints, inter_axial, lever_arm, tension);
  jam_profile* profile = nullptr;
  check(jam_tip_torque_profile(mech.get(), chain.get(), &profile));
  const ProfilePtr guard(profile, &jam_profile_free);
  write_output(out_path, profile_csv(profile, nullptr));
  return kExitOk;
}

int cmd_geometry(const std::string& config, const std::vector<double>& angles,
                 const std::string& route_name, double lever_arm,
                 const std::string& out_path) {
  if (angles.empty()) fail_usage("--angles needs at least one joint angle");
  const MechanismPtr mech = load_mechanism(config);
  double inter_axial = 0.0;
  check(jam_mechanism_inter_axial(mech.get(), &inter_axial));
  double max_angle = 0.0;
  check(jam_mechanism_max_joint_angle(mech.get(), &max_angle));

  int32_t route = 0;
  if (route_name == "conical") {
    route = JAM_ROUTE_CONICAL_PIVOT;
  } else if (route_name == "straight") {
    route = JAM_ROUTE_THROUGH_HOLE_STRAIGHT;
  } else {
    fail_usage("--route must be conical or straight, got '" + route_name +
               "'");
  }

  const ChainPtr chain = make_chain(static_cast<int>(angles.size()),
                                    inter_axial, lever_arm, 0.0);
  double length = 0.0;
  check(jam_wire_path_length(chain.get(), angles.data(),
                             static_cast<int32_t>(angles.size()), route,
                             max_angle, &length));

  std::vector<double> xy(2 * (angles.size() + 1), 0.0);
  check(jam_chain_pose(chain.get(), angles.data(),
                       static_cast<int32_t>(angles.size()), xy.data()));
  std::string csv = "joint_index,x_m,y_m\n";
  for (std::size_t i = 0; i <= angles.size(); ++i) {
    csv += std::to_string(i + 1) + ',' + fmt(xy[2 * i]) + ',' +
           fmt(xy[2 * i + 1]) + '\n';
  }
  write_output(out_path, csv);
  std::cout << "wire_length_m=" << fmt(length) << "\n";
  return kExitOk;
}

int cmd_calibrate(const std::string& config, const std::string& data_path,
                  double lever_arm, const std::string& out_path) {
  const MechanismPtr mech = load_mechanism(config);
  jam_measurements* all = nullptr;
  check(jam_measurements_load(data_path.c_str(), &all));
  const MeasurementsPtr all_guard(all, &jam_measurements_free);

  const char* family = nullptr;
  check(jam_mechanism_family(mech.get(), &family));

  // Keep the rows tagged for this mechanism (untagged rows apply to any).
  jam_measurements* set = nullptr;
  check(jam_measurements_select(all, family, &set));
  const MeasurementsPtr guard(set, &jam_measurements_free);
  check(jam_measurements_set_lever_arm(set, lever_arm));

  nlohmann::json report;
  report["mechanism"] = family;
  report["record_count"] = jam_measurements_size(set);
  for (const bool through_origin : {false, true}) {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double engagement = 0.0;
    check(jam_measurements_fit(set, through_origin ? 1 : 0, &slope, &intercept,
                               &r_squared, &engagement));
    double mu = 0.0;
    check(jam_calibrate_mu(mech.get(), slope, &mu));
    report[through_origin ? "through_origin" : "free_intercept"] = {
        {"slope_Nm_per_N", slope},
        {"intercept_Nm", intercept},
        {"r_squared", r_squared},
        {"engagement_tension_N", engagement},
        {"mu_effective", mu},
    };
  }
  write_output(out_path, report.dump(2) + "\n");
  return kExitOk;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path) {
  jam_design_table* table = nullptr;
  check(jam_sweep_run(read_file(spec_path).c_str(), &table));
  char* csv = nullptr;
  const jam_status status = jam_design_table_to_csv(table, &csv);
  if (status != JAM_OK) {
    jam_design_table_free(table);
    check(status);
  }
  write_output(out_path, csv);
  jam_text_free(csv);
  jam_design_table_free(table);
  return kExitOk;
}

int cmd_pareto(const std::string& in_path, const std::string& objectives,
               const std::string& out_path) {
  jam_design_table* table = nullptr;
  check(jam_design_table_from_csv(read_file(in_path).c_str(), &table));
  jam_design_table* front = nullptr;
  jam_status status = jam_pareto_front(table, objectives.c_str(), &front);
  if (status != JAM_OK) {
    jam_design_table_free(table);
    check(status);
  }
  char* csv = nullptr;
  status = jam_design_table_to_csv(front, &csv);
  if (status != JAM_OK) {
    jam_design_table_free(front);
    jam_design_table_free(table);
    check(status);
  }
  const bool empty = jam_design_table_size(front) == 0;
  write_output(out_path, csv);
  jam_text_free(csv);
  jam_design_table_free(front);
  jam_design_table_free(table);
  return empty ? kExitEmpty : kExitOk;
}

int cmd_crossover(const std::string& config_a, const std::string& config_b,
                  int joints, double tension) {
  const MechanismPtr a = load_mechanism(config_a);
  const MechanismPtr b = load_mechanism(config_b);
  double inter_axial = 0.0;
  check(jam_mechanism_inter_axial(a.get(), &inter_axial));
  const ChainPtr chain = make_chain(joints, inter_axial, 0.122, tension);
  int32_t joint = 0;
  check(jam_crossover_joint(a.get(), b.get(), chain.get(), &joint));
  if (joint == 0) {
    std::cout << "crossover_joint=none\n";
    return kExitEmpty;
  }
  std::cout << "crossover_joint=" << joint << "\n";
  return kExitOk;
}

int cmd_experiment(const std::string& mode,
                   const std::vector<std::string>& configs, int joints,
                   double tension, const std::vector<double>& grid,
                   double lever_arm, const std::string& out_path) {
  if (configs.empty()) fail_usage("give at least one mechanism config");
  std::string csv;
  if (mode == "i") {
    csv = "mechanism,joint_index,tension_N,torque_Nm\n";
    for (const std::string& path : configs) {
      const MechanismPtr mech = load_mechanism(path);
      double inter_axial = 0.0;
      check(jam_mechanism_inter_axial(mech.get(), &inter_axial));
      const ChainPtr chain =
          make_chain(joints, inter_axial, lever_arm, tension);
      jam_profile* profile = nullptr;
      check(jam_tip_torque_profile(mech.get(), chain.get(), &profile));
      const ProfilePtr guard(profile, &jam_profile_free);
      const char* family = nullptr;
      check(jam_mechanism_family(mech.get(), &family));
      csv += profile_csv(profile, family).substr(
          std::string("mechanism,joint_index,tension_N,torque_Nm\n").size());
    }
  } else if (mode == "ii") {
    if (grid.empty()) fail_usage("--grid needs at least one tension value");
    csv = "mechanism,tension_N,torque_Nm\n";
    for (const std::string& path : configs) {
      const MechanismPtr mech = load_mechanism(path);
      const char* family = nullptr;
      check(jam_mechanism_family(mech.get(), &family));
      for (const double t : grid) {
        double torque = 0.0;
        check(jam_mechanism_torque(mech.get(), t, &torque));
        csv += std::string(family) + ',' + fmt(t) + ',' + fmt(torque) + '\n';
      }
    }
  } else {
    fail_usage("--mode must be i or ii, got '" + mode + "'");
  }
  write_output(out_path, csv);
  return kExitOk;
}

int cmd_recommend(const std::vector<std::string>& configs,
                  double min_tip_torque, double max_width, int joints,
                  double tension, const std::string& out_path) {
  if (configs.empty()) fail_usage("give at least one mechanism config");
  std::vector<MechanismPtr> owners;
  std::vector<const jam_mechanism*> handles;
  for (const std::string& path : configs) {
    owners.push_back(load_mechanism(path));
    handles.push_back(owners.back().get());
  }
  const nlohmann::json requirement = {
      {"min_tip_torque_Nm", min_tip_torque},
      {"max_width_m", max_width},
      {"joint_count", joints},
      {"max_tension_N", tension},
  };
  char* report = nullptr;
  check(jam_recommend(handles.data(), static_cast<int32_t>(handles.size()),
                      requirement.dump().c_str(), &report));
  const std::string text = report;
  jam_text_free(report);
  write_output(out_path, text);
  const auto parsed = nlohmann::json::parse(text);
  return parsed["ranked"].empty() ? kExitEmpty : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jamstring: holding-torque models, chain geometry, calibration "
               "and design exploration for tendon-driven jamming strings"};
  app.require_subcommand(1);

  std::string config;
  std::string config_b;
  std::vector<std::string> configs;
  std::string out_path;
  std::string data_path;
  std::string spec_path;
  std::string objectives;
  std::string route = "conical";
  std::string mode;
  std::vector<double> angles;
  std::vector<double> grid = {0, 10, 20, 30, 40, 50};
  double tension = 50.0;
  double lever_arm = 0.122;
  double min_tip_torque = 0.0;
  double max_width = 0.0;
  int joints = 4;

  auto* torque = app.add_subcommand(
      "torque", "Single-joint holding torque at a given tension");
  torque->add_option("config", config, "mechanism config file")->required();
  torque->add_option("--tension", tension, "wire tension, N")->required();

  auto* propagate = app.add_subcommand(
      "propagate", "Per-joint torque profile along a chain (CSV)");
  propagate->add_option("config", config, "mechanism config file")->required();
  propagate->add_option("--joints", joints, "number of joints")
      ->required()
      ->check(CLI::PositiveNumber);
  propagate->add_option("--tension", tension, "root tension, N (default 50)");
  propagate->add_option("--lever-arm", lever_arm,
                        "lever arm, m (default 0.122)");
  propagate->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* geometry = app.add_subcommand(
      "geometry", "Planar chain pose and wire route length");
  geometry->add_option("config", config, "mechanism config file")->required();
  geometry
      ->add_option("--angles", angles,
                   "joint angles in degrees, comma separated")
      ->required()
      ->delimiter(',');
  geometry->add_option("--route", route, "wire route: conical or straight");
  geometry->add_option("--lever-arm", lever_arm, "lever arm, m");
  geometry->add_option("--out", out_path, "pose CSV path (default stdout)");

  auto* calibrate = app.add_subcommand(
      "calibrate", "Fit torque-vs-tension lines and derive mu (JSON report)");
  calibrate->add_option("config", config, "mechanism config file")->required();
  calibrate->add_option("--data", data_path, "measurement CSV file")
      ->required();
  calibrate->add_option("--lever-arm", lever_arm,
                        "lever arm, m (default 0.122)");
  calibrate->add_option("--out", out_path, "report path (default stdout)");

  auto* sweep = app.add_subcommand(
      "sweep", "Evaluate a design grid from a sweep spec (CSV)");
  sweep->add_option("--spec", spec_path, "sweep spec JSON file")->required();
  sweep->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* pareto = app.add_subcommand(
      "pareto", "Non-dominated subset of a design record CSV");
  pareto->add_option("--in", data_path, "design record CSV file")->required();
  pareto
      ->add_option("--objectives", objectives,
                   "e.g. tip_torque_Nm:max,width_m:min")
      ->required();
  pareto->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* crossover = app.add_subcommand(
      "crossover", "First joint where mechanism A holds at least as much "
                   "torque as mechanism B");
  crossover->add_option("config_a", config, "mechanism A config")->required();
  crossover->add_option("config_b", config_b, "mechanism B config")
      ->required();
  crossover->add_option("--joints", joints, "chain length to scan")
      ->required()
      ->check(CLI::PositiveNumber);
  crossover->add_option("--tension", tension, "root tension, N (default 50)");

  auto* experiment = app.add_subcommand(
      "experiment", "Replicate the holding-torque experiments (CSV)");
  experiment->add_option("--mode", mode, "i (per joint) or ii (per tension)")
      ->required();
  experiment->add_option("configs", configs, "mechanism config files")
      ->required();
  experiment->add_option("--joints", joints, "chain length for mode i");
  experiment->add_option("--tension", tension, "root tension for mode i, N");
  experiment->add_option("--grid", grid, "tension grid for mode ii, N")
      ->delimiter(',');
  experiment->add_option("--lever-arm", lever_arm, "lever arm, m");
  experiment->add_option("--out", out_path, "output CSV path");

  auto* recommend = app.add_subcommand(
      "recommend", "Rank candidate mechanisms against a requirement (JSON)");
  recommend->add_option("configs", configs, "mechanism config files")
      ->required();
  recommend
      ->add_option("--min-tip-torque", min_tip_torque,
                   "required tip torque, N*m")
      ->required();
  recommend->add_option("--max-width", max_width, "maximum part width, m")
      ->required();
  recommend->add_option("--joints", joints, "chain length")
      ->check(CLI::PositiveNumber);
  recommend->add_option("--tension", tension, "available tension, N");
  recommend->add_option("--out", out_path, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*torque) return cmd_torque(config, tension);
    if (*propagate) {
      return cmd_propagate(config, joints, tension, lever_arm, out_path);
    }
    if (*geometry) {
      return cmd_geometry(config, angles, route, lever_arm, out_path);
    }
    if (*calibrate) {
      return cmd_calibrate(config, data_path, lever_arm, out_path);
    }
    if (*sweep) return cmd_sweep(spec_path, out_path);
    if (*pareto) return cmd_pareto(data_path, objectives, out_path);
    if (*crossover) return cmd_crossover(config, config_b, joints, tension);
    if (*experiment) {
      return cmd_experiment(mode, configs, joints, tension, grid, lever_arm,
                            out_path);
    }
    if (*recommend) {
      return cmd_recommend(configs, min_tip_torque, max_width, joints, tension,
                           out_path);
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
