#include "explorer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "csv.hpp"
#include "error.hpp"

namespace jamstring {

namespace {

// Axis order defines the grid order; the last axis varies fastest.
const char* const kAxisNames[] = {"radius_m",    "count", "thickness_m",
                                  "clearance_m", "mu",    "retention_k"};
constexpr int kAxisCount = 6;
constexpr int kAxisRadius = 0;
constexpr int kAxisCountIdx = 1;
constexpr int kAxisThickness = 2;
constexpr int kAxisClearance = 3;
constexpr int kAxisMu = 4;
constexpr int kAxisRetention = 5;

bool axis_applies(const std::string& family, int axis) {
  if (family == "bead") {
    return axis == kAxisRadius || axis == kAxisMu || axis == kAxisRetention;
  }
  return true;
}

std::vector<double> axis_values(const std::string& name,
                                const ParamRange& range, bool integer_axis) {
  require(range.steps >= 1, errc::parse,
          "range '" + name + "': steps must be >= 1");
  require(range.min <= range.max, errc::parse,
          "range '" + name + "': min must be <= max");
  std::vector<double> values;
  if (range.steps == 1) {
    values.push_back(range.min);
  } else {
    for (int i = 0; i < range.steps; ++i) {
      values.push_back(range.min +
                       i * (range.max - range.min) / (range.steps - 1));
    }
  }
  if (integer_axis) {
    for (double& v : values) {
      const double rounded = std::round(v);
      require(std::abs(v - rounded) < 1e-9, errc::parse,
              "range '" + name + "' must generate integer values");
      v = rounded;
    }
    for (std::size_t i = 1; i < values.size(); ++i) {
      require(values[i] > values[i - 1], errc::parse,
              "range '" + name + "' repeats integer values; lower steps");
    }
  }
  return values;
}

struct PointValues {
  double radius;
  int count;
  double thickness;
  double clearance;
  double mu;
  double retention;
};

Mechanism mechanism_from_point(const std::string& family,
                               const PointValues& v) {
  Mechanism m = preset_mechanism(family);
  if (family == "bead") {
    auto& p = std::get<BeadParams>(m.params);
    p.contact_radius_m = v.radius;
  } else if (family == "comb") {
    auto& p = std::get<CombParams>(m.params);
    p.plate_radius_m = v.radius;
    p.plate_count = v.count;
    p.plate_thickness_m = v.thickness;
    p.clearance_m = v.clearance;
  } else {
    auto& p = std::get<RadialParams>(m.params);
    p.outer_radius_m = v.radius;
    p.layer_count = v.count;
    p.wall_thickness_m = v.thickness;
    p.clearance_m = v.clearance;
  }
  m.set_mu(v.mu);
  m.retention_k = v.retention;
  m.validate();
  return m;
}

double record_field(const DesignRecord& r, const std::string& field) {
  if (field == "radius_m") return r.radius_m;
  if (field == "count") return r.count;
  if (field == "thickness_m") return r.thickness_m;
  if (field == "clearance_m") return r.clearance_m;
  if (field == "mu") return r.mu;
  if (field == "retention_k") return r.retention_k;
  if (field == "root_torque_Nm") return r.root_torque_Nm;
  if (field == "tip_torque_Nm") return r.tip_torque_Nm;
  if (field == "width_m") return r.width_m;
  if (field == "weight_proxy") return r.weight_proxy;
  throw Error(errc::unknown_field, "unknown record field '" + field + "'");
}

}  // namespace

std::vector<DesignRecord> run_sweep(const SweepSpec& spec) {
  const Mechanism baseline = preset_mechanism(spec.family);
  spec.chain.validate();

  for (const auto& [name, range] : spec.ranges) {
    (void)range;
    bool known = false;
    for (int a = 0; a < kAxisCount; ++a) {
      if (name == kAxisNames[a]) {
        require(axis_applies(spec.family, a), errc::parse,
                "parameter '" + name + "' does not apply to family '" +
                    spec.family + "'");
        known = true;
      }
    }
    require(known, errc::parse, "unknown sweep parameter '" + name + "'");
  }
  for (const auto& [name, value] : spec.fixed) {
    (void)value;
    bool known = false;
    for (int a = 0; a < kAxisCount; ++a) {
      if (name == kAxisNames[a]) {
        require(axis_applies(spec.family, a), errc::parse,
                "parameter '" + name + "' does not apply to family '" +
                    spec.family + "'");
        known = true;
      }
    }
    require(known, errc::parse, "unknown fixed parameter '" + name + "'");
  }

  // Baseline point from the family preset, then fixed overrides.
  PointValues base{};
  if (spec.family == "bead") {
    const auto& p = std::get<BeadParams>(baseline.params);
    base = {p.contact_radius_m, 1, 0.0, 0.0, baseline.material().mu,
            baseline.retention_k};
  } else if (spec.family == "comb") {
    const auto& p = std::get<CombParams>(baseline.params);
    base = {p.plate_radius_m, p.plate_count,  p.plate_thickness_m,
            p.clearance_m,    baseline.material().mu, baseline.retention_k};
  } else {
    const auto& p = std::get<RadialParams>(baseline.params);
    base = {p.outer_radius_m, p.layer_count,  p.wall_thickness_m,
            p.clearance_m,    baseline.material().mu, baseline.retention_k};
  }

  auto apply = [](PointValues& v, int axis, double value) {
    switch (axis) {
      case kAxisRadius: v.radius = value; break;
      case kAxisCountIdx: v.count = static_cast<int>(value); break;
      case kAxisThickness: v.thickness = value; break;
      case kAxisClearance: v.clearance = value; break;
      case kAxisMu: v.mu = value; break;
      case kAxisRetention: v.retention = value; break;
    }
  };
  for (const auto& [name, value] : spec.fixed) {
    for (int a = 0; a < kAxisCount; ++a) {
      if (name == kAxisNames[a]) apply(base, a, value);
    }
  }

  std::vector<std::vector<double>> axes(kAxisCount);
  std::size_t total = 1;
  for (int a = 0; a < kAxisCount; ++a) {
    const auto it = spec.ranges.find(kAxisNames[a]);
    if (it == spec.ranges.end()) continue;
    axes[a] = axis_values(kAxisNames[a], it->second, a == kAxisCountIdx);
    total *= axes[a].size();
  }
  require(total <= spec.grid_cap, errc::cap_exceeded,
          "sweep grid has " + std::to_string(total) +
              " points; raise grid_cap to at least " + std::to_string(total));

  std::vector<DesignRecord> records;
  records.reserve(total);

  std::vector<std::size_t> index(kAxisCount, 0);
  while (true) {
    PointValues v = base;
    for (int a = 0; a < kAxisCount; ++a) {
      if (!axes[a].empty()) apply(v, a, axes[a][index[a]]);
    }

    DesignRecord rec;
    rec.family = spec.family;
    rec.radius_m = v.radius;
    rec.count = v.count;
    rec.thickness_m = v.thickness;
    rec.clearance_m = v.clearance;
    rec.mu = v.mu;
    rec.retention_k = v.retention;
    try {
      const Mechanism m = mechanism_from_point(spec.family, v);
      rec.root_torque_Nm = m.torque_at_tension(spec.chain.root_tension_N);
      const double tip_tension =
          joint_tension(spec.chain.root_tension_N,
                        AttenuationModel{m.retention_k}, spec.chain.joint_count);
      rec.tip_torque_Nm = m.torque_at_tension(tip_tension);
      rec.width_m = m.width_m();
      rec.weight_proxy = m.cross_section_area_m2();
    } catch (const Error&) {
      rec.feasible = false;
    }
    records.push_back(std::move(rec));

    // Advance the mixed-radix counter; last axis fastest.
    int a = kAxisCount - 1;
    for (; a >= 0; --a) {
      if (axes[a].empty()) continue;
      if (++index[a] < axes[a].size()) break;
      index[a] = 0;
    }
    if (a < 0) break;
  }
  return records;
}

std::vector<Objective> parse_objectives(const std::string& text) {
  std::vector<Objective> objectives;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    require(colon != std::string::npos, errc::parse,
            "objective '" + item + "' must look like field:max or field:min");
    Objective obj;
    obj.field = item.substr(0, colon);
    const std::string dir = item.substr(colon + 1);
    if (dir == "max") {
      obj.direction = Direction::maximize;
    } else if (dir == "min") {
      obj.direction = Direction::minimize;
    } else {
      throw Error(errc::parse, "objective direction must be max or min, got '" +
                                   dir + "'");
    }
    objectives.push_back(std::move(obj));
  }
  require(!objectives.empty(), errc::parse, "no objectives given");
  return objectives;
}

std::vector<DesignRecord> pareto_front(std::span<const DesignRecord> records,
                                       std::span<const Objective> objectives) {
  require(!objectives.empty(), errc::domain, "need at least one objective");

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].feasible) candidates.push_back(i);
  }
  // Normalize every objective to "larger is better".
  std::vector<std::vector<double>> score(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    score[c].reserve(objectives.size());
    for (const Objective& obj : objectives) {
      const double raw = record_field(records[candidates[c]], obj.field);
      score[c].push_back(obj.direction == Direction::maximize ? raw : -raw);
    }
  }

  auto dominates = [&](std::size_t a, std::size_t b) {
    bool strictly_better = false;
    for (std::size_t k = 0; k < objectives.size(); ++k) {
      if (score[a][k] < score[b][k]) return false;
      if (score[a][k] > score[b][k]) strictly_better = true;
    }
    return strictly_better;
  };

  std::vector<DesignRecord> front;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size(); ++j) {
      if (j != i && dominates(j, i)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) front.push_back(records[candidates[i]]);
  }
  return front;
}

void Requirement::validate() const {
  require(min_tip_torque_Nm > 0.0, errc::domain,
          "min_tip_torque must be > 0");
  require(max_width_m > 0.0, errc::domain, "max_width must be > 0");
  require(joint_count >= 1, errc::domain, "joint_count must be >= 1");
  require(max_tension_N > 0.0, errc::domain, "max_tension must be > 0");
}

Recommendation recommend(const Requirement& requirement,
                         std::span<const Mechanism> candidates) {
  requirement.validate();
  Recommendation rec;
  rec.requirement = requirement;
  for (const Mechanism& mech : candidates) {
    ChainConfig chain;
    chain.joint_count = requirement.joint_count;
    chain.inter_axial_m = mech.inter_axial_m;
    chain.root_tension_N = requirement.max_tension_N;
    TorqueProfile profile = tip_torque_profile(mech, chain);
    const double tip = profile.entries.back().torque_Nm;
    const double width = mech.width_m();

    std::string binding;
    if (tip < requirement.min_tip_torque_Nm) binding = "min_tip_torque";
    if (width > requirement.max_width_m) {
      if (!binding.empty()) binding += "+";
      binding += "max_width";
    }
    if (binding.empty()) {
      rec.ranked.push_back({mech, std::move(profile), tip,
                            tip - requirement.min_tip_torque_Nm, width});
    } else {
      rec.infeasible.push_back({mech.display_name(), binding, tip, width});
    }
  }
  std::stable_sort(rec.ranked.begin(), rec.ranked.end(),
                   [](const RankedDesign& a, const RankedDesign& b) {
                     if (a.tip_torque_Nm != b.tip_torque_Nm) {
                       return a.tip_torque_Nm > b.tip_torque_Nm;
                     }
                     if (a.width_m != b.width_m) return a.width_m < b.width_m;
                     return a.mech.part_count() < b.mech.part_count();
                   });
  return rec;
}

std::string records_to_csv(std::span<const DesignRecord> records) {
  std::string out =
      "mechanism,radius_m,count,thickness_m,clearance_m,mu,retention_k,"
      "feasible,root_torque_Nm,tip_torque_Nm,width_m,weight_proxy\n";
  for (const DesignRecord& r : records) {
    out += r.family;
    out += ',';
    out += format_double(r.radius_m);
    out += ',';
    out += std::to_string(r.count);
    out += ',';
    out += format_double(r.thickness_m);
    out += ',';
    out += format_double(r.clearance_m);
    out += ',';
    out += format_double(r.mu);
    out += ',';
    out += format_double(r.retention_k);
    out += ',';
    out += r.feasible ? '1' : '0';
    out += ',';
    out += format_double(r.root_torque_Nm);
    out += ',';
    out += format_double(r.tip_torque_Nm);
    out += ',';
    out += format_double(r.width_m);
    out += ',';
    out += format_double(r.weight_proxy);
    out += '\n';
  }
  return out;
}

std::vector<DesignRecord> records_from_csv(const std::string& text) {
  std::istringstream in(text);
  const CsvTable table = read_csv(in);
  const char* const names[] = {"mechanism",      "radius_m",  "count",
                               "thickness_m",    "clearance_m", "mu",
                               "retention_k",    "feasible",  "root_torque_Nm",
                               "tip_torque_Nm",  "width_m",   "weight_proxy"};
  require(table.header.size() == 12, errc::parse,
          "design record CSV must have 12 columns");
  for (int i = 0; i < 12; ++i) {
    require(table.header[i] == names[i], errc::parse,
            std::string("design record CSV column ") + std::to_string(i + 1) +
                " must be " + names[i]);
  }
  std::vector<DesignRecord> records;
  records.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    require(row.size() == 12, errc::parse,
            "design record CSV line " +
                std::to_string(table.line_numbers[i]) + " is ragged");
    DesignRecord r;
    try {
      r.family = row[0];
      r.radius_m = std::stod(row[1]);
      r.count = std::stoi(row[2]);
      r.thickness_m = std::stod(row[3]);
      r.clearance_m = std::stod(row[4]);
      r.mu = std::stod(row[5]);
      r.retention_k = std::stod(row[6]);
      r.feasible = row[7] == "1";
      r.root_torque_Nm = std::stod(row[8]);
      r.tip_torque_Nm = std::stod(row[9]);
      r.width_m = std::stod(row[10]);
      r.weight_proxy = std::stod(row[11]);
    } catch (const std::exception&) {
      throw Error(errc::parse, "design record CSV line " +
                                   std::to_string(table.line_numbers[i]) +
                                   " has a non-numeric cell");
    }
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace jamstring
