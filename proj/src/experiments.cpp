#include "experiments.hpp"

#include <cmath>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"

namespace jamstring {

namespace {

bool parse_double(const std::string& cell, double& out) {
  try {
    std::size_t used = 0;
    out = std::stod(cell, &used);
    return used == cell.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_int(const std::string& cell, int& out) {
  try {
    std::size_t used = 0;
    out = std::stoi(cell, &used);
    return used == cell.size();
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

MeasurementSet load_measurements(std::istream& in) {
  const CsvTable table = read_csv(in);

  const int col_tension = table.column("tension_N");
  const int col_torque = table.column("torque_Nm");
  const int col_mechanism = table.column("mechanism");
  const int col_joint = table.column("joint_index");

  std::vector<std::string> problems;
  if (col_tension < 0) problems.push_back("missing required column tension_N");
  if (col_torque < 0) problems.push_back("missing required column torque_Nm");
  for (const std::string& name : table.header) {
    if (name != "tension_N" && name != "torque_Nm" && name != "mechanism" &&
        name != "joint_index") {
      problems.push_back("unknown column '" + name + "'");
    }
  }
  if (!problems.empty()) {
    std::string msg = "measurement CSV rejected:";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw Error(errc::ingestion, msg);
  }

  MeasurementSet set;
  const std::size_t width = table.header.size();
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const std::string line = "line " + std::to_string(table.line_numbers[i]);
    if (row.size() != width) {
      problems.push_back(line + ": expected " + std::to_string(width) +
                         " cells, got " + std::to_string(row.size()));
      continue;
    }
    MeasurementRecord rec;
    bool ok = true;
    if (!parse_double(row[col_tension], rec.tension_N)) {
      problems.push_back(line + ": non-numeric tension_N '" +
                         row[col_tension] + "'");
      ok = false;
    } else if (rec.tension_N < 0.0) {
      problems.push_back(line + ": negative tension_N " + row[col_tension]);
      ok = false;
    }
    if (!parse_double(row[col_torque], rec.torque_Nm)) {
      problems.push_back(line + ": non-numeric torque_Nm '" +
                         row[col_torque] + "'");
      ok = false;
    } else if (rec.torque_Nm < 0.0) {
      problems.push_back(line + ": negative torque_Nm " + row[col_torque]);
      ok = false;
    }
    if (col_joint >= 0) {
      if (!parse_int(row[col_joint], rec.joint_index) || rec.joint_index < 1) {
        problems.push_back(line + ": joint_index must be an integer >= 1, "
                           "got '" + row[col_joint] + "'");
        ok = false;
      }
    }
    if (col_mechanism >= 0) rec.mechanism_id = row[col_mechanism];
    if (ok) set.records.push_back(rec);
  }

  if (!problems.empty()) {
    std::string msg = "measurement CSV rejected:";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw Error(errc::ingestion, msg);
  }
  return set;
}

MeasurementSet load_measurements_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return load_measurements(in);
}

MeasurementSet select_mechanism(const MeasurementSet& set,
                                const std::string& mechanism_id) {
  MeasurementSet out = set;
  out.records.clear();
  for (const MeasurementRecord& rec : set.records) {
    if (rec.mechanism_id.empty() || rec.mechanism_id == mechanism_id) {
      out.records.push_back(rec);
    }
  }
  require(!out.records.empty(), errc::ingestion,
          "no measurement records for mechanism '" + mechanism_id + "'");
  return out;
}

AffineFit fit_affine(std::span<const double> tension_N,
                     std::span<const double> torque_Nm, bool through_origin) {
  require(tension_N.size() == torque_Nm.size(), errc::degenerate_fit,
          "tension and torque lists differ in length");
  require(tension_N.size() >= 2, errc::degenerate_fit,
          "need at least two points to fit a line");
  bool distinct = false;
  for (std::size_t i = 1; i < tension_N.size(); ++i) {
    if (tension_N[i] != tension_N[0]) {
      distinct = true;
      break;
    }
  }
  require(distinct, errc::degenerate_fit,
          "need at least two distinct tension values to fit a line");

  const std::size_t n = tension_N.size();
  AffineFit fit;
  fit.through_origin = through_origin;

  if (through_origin) {
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sxy += tension_N[i] * torque_Nm[i];
      sxx += tension_N[i] * tension_N[i];
    }
    fit.slope_Nm_per_N = sxy / sxx;
    fit.intercept_Nm = 0.0;
    double ss_res = 0.0;
    double ss_tot = 0.0;  // uncentered
    for (std::size_t i = 0; i < n; ++i) {
      const double resid = torque_Nm[i] - fit.slope_Nm_per_N * tension_N[i];
      ss_res += resid * resid;
      ss_tot += torque_Nm[i] * torque_Nm[i];
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  } else {
    double sx = 0.0;
    double sy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sx += tension_N[i];
      sy += torque_Nm[i];
    }
    const double mean_x = sx / n;
    const double mean_y = sy / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double dx = tension_N[i] - mean_x;
      sxx += dx * dx;
      sxy += dx * (torque_Nm[i] - mean_y);
    }
    fit.slope_Nm_per_N = sxy / sxx;
    fit.intercept_Nm = mean_y - fit.slope_Nm_per_N * mean_x;
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double resid =
          torque_Nm[i] - (fit.slope_Nm_per_N * tension_N[i] + fit.intercept_Nm);
      ss_res += resid * resid;
      const double dy = torque_Nm[i] - mean_y;
      ss_tot += dy * dy;
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot
                                 : (ss_res == 0.0 ? 1.0 : 0.0);
  }

  fit.r_squared = std::min(1.0, std::max(0.0, fit.r_squared));
  if (fit.slope_Nm_per_N > 0.0 && fit.intercept_Nm < 0.0) {
    fit.engagement_tension_N = -fit.intercept_Nm / fit.slope_Nm_per_N;
  }
  return fit;
}

AffineFit fit_affine(const MeasurementSet& set, bool through_origin) {
  std::vector<double> tension;
  std::vector<double> torque;
  tension.reserve(set.records.size());
  torque.reserve(set.records.size());
  for (const MeasurementRecord& rec : set.records) {
    tension.push_back(rec.tension_N);
    torque.push_back(rec.torque_Nm);
  }
  return fit_affine(tension, torque, through_origin);
}

double calibrate_mu(const Mechanism& mech, const AffineFit& fit) {
  require(fit.slope_Nm_per_N > 0.0, errc::calibration,
          "calibration needs a positive torque-vs-tension slope");
  return fit.slope_Nm_per_N / mech.slope_factor();
}

double calibrate_mu_from_anchor(const Mechanism& mech, int joint_index,
                                double root_tension_N, double torque_Nm) {
  require(torque_Nm > 0.0, errc::calibration,
          "anchor torque must be positive");
  const double local = joint_tension(root_tension_N,
                                     AttenuationModel{mech.retention_k},
                                     joint_index);
  require(local > 0.0, errc::calibration,
          "anchor joint sees no tension; cannot calibrate");
  AffineFit fit;
  fit.slope_Nm_per_N = torque_Nm / local;
  fit.through_origin = true;
  fit.r_squared = 1.0;
  return calibrate_mu(mech, fit);
}

std::vector<TorqueProfile> simulate_experiment_i(
    std::span<const Mechanism> mechs, const ChainConfig& chain) {
  std::vector<TorqueProfile> profiles;
  profiles.reserve(mechs.size());
  for (const Mechanism& mech : mechs) {
    profiles.push_back(tip_torque_profile(mech, chain));
  }
  return profiles;
}

std::vector<TensionTorqueSeries> simulate_experiment_ii(
    std::span<const Mechanism> mechs, std::span<const double> tension_grid_N) {
  require(!tension_grid_N.empty(), errc::domain,
          "tension grid must be non-empty");
  for (double t : tension_grid_N) {
    require(t >= 0.0, errc::domain, "tension grid values must be >= 0");
  }
  std::vector<TensionTorqueSeries> result;
  result.reserve(mechs.size());
  for (const Mechanism& mech : mechs) {
    TensionTorqueSeries series;
    series.reserve(tension_grid_N.size());
    for (double t : tension_grid_N) {
      series.emplace_back(t, mech.torque_at_tension(t));
    }
    result.push_back(std::move(series));
  }
  return result;
}

}  // namespace jamstring
