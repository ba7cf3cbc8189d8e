#include "config.hpp"

#include <set>

#include <json.hpp>

#include "csv.hpp"
#include "error.hpp"

namespace jamstring {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
  json doc = json::parse(text, nullptr, false);
  require(!doc.is_discarded(), errc::parse,
          std::string(what) + ": not valid JSON");
  require(doc.is_object(), errc::parse,
          std::string(what) + ": top level must be an object");
  return doc;
}

double get_number(const json& doc, const std::string& key) {
  require(doc.contains(key), errc::parse, "missing required key '" + key + "'");
  require(doc[key].is_number(), errc::parse,
          "key '" + key + "' must be a number");
  return doc[key].get<double>();
}

int get_int(const json& doc, const std::string& key) {
  require(doc.contains(key), errc::parse, "missing required key '" + key + "'");
  require(doc[key].is_number_integer(), errc::parse,
          "key '" + key + "' must be an integer");
  return doc[key].get<int>();
}

std::string get_string(const json& doc, const std::string& key) {
  require(doc.contains(key), errc::parse, "missing required key '" + key + "'");
  require(doc[key].is_string(), errc::parse,
          "key '" + key + "' must be a string");
  return doc[key].get<std::string>();
}

void reject_unknown_keys(const json& doc, const std::set<std::string>& known,
                         const char* what) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    require(known.count(key) > 0, errc::parse,
            std::string(what) + ": unknown key '" + key + "'");
  }
}

}  // namespace

Mechanism mechanism_from_json(const std::string& json_text) {
  const json doc = parse_json(json_text, "mechanism config");

  const std::string family = get_string(doc, "mechanism");
  const std::string units = get_string(doc, "units");
  require(units == "si" || units == "mm", errc::parse,
          "units must be \"si\" or \"mm\"");
  const double length_scale = units == "mm" ? 1e-3 : 1.0;
  auto length = [&](const std::string& key) {
    return get_number(doc, key) * length_scale;
  };

  std::set<std::string> known = {"mechanism", "units", "mu", "name", "notes",
                                 "inter_axial_distance", "attenuation",
                                 "engagement_tension_N"};

  Mechanism mech;
  if (family == "bead") {
    known.insert({"contact_radius", "cone_apex_angle_deg"});
    reject_unknown_keys(doc, known, "mechanism config");
    BeadParams p;
    p.contact_radius_m = length("contact_radius");
    p.cone_apex_angle_deg = get_number(doc, "cone_apex_angle_deg");
    mech = make_bead(p);
  } else if (family == "comb") {
    known.insert({"plate_radius", "plate_count", "plate_thickness",
                  "clearance", "training_angle_deg"});
    reject_unknown_keys(doc, known, "mechanism config");
    CombParams p;
    p.plate_radius_m = length("plate_radius");
    p.plate_count = get_int(doc, "plate_count");
    p.plate_thickness_m = length("plate_thickness");
    p.clearance_m = length("clearance");
    p.training_angle_deg = get_number(doc, "training_angle_deg");
    mech = make_comb(p);
  } else if (family == "radial") {
    known.insert({"outer_radius", "layer_count", "wall_thickness",
                  "clearance"});
    reject_unknown_keys(doc, known, "mechanism config");
    RadialParams p;
    p.outer_radius_m = length("outer_radius");
    p.layer_count = get_int(doc, "layer_count");
    p.wall_thickness_m = length("wall_thickness");
    p.clearance_m = length("clearance");
    mech = make_radial(p);
  } else {
    throw Error(errc::parse, "mechanism must be bead, comb or radial, got '" +
                                 family + "'");
  }

  mech.set_mu(get_number(doc, "mu"));
  if (doc.contains("name")) mech.name = get_string(doc, "name");
  if (doc.contains("notes")) {
    require(doc["notes"].is_object(), errc::parse,
            "notes must be an object of strings");
  }
  if (doc.contains("inter_axial_distance")) {
    mech.inter_axial_m = length("inter_axial_distance");
  }
  if (doc.contains("attenuation")) {
    const json& att = doc["attenuation"];
    require(att.is_object(), errc::parse, "attenuation must be an object");
    reject_unknown_keys(att, {"k"}, "attenuation");
    mech.retention_k = get_number(att, "k");
  }
  if (doc.contains("engagement_tension_N")) {
    mech.engagement_tension_N = get_number(doc, "engagement_tension_N");
  }

  mech.validate();
  return mech;
}

Mechanism load_mechanism_file(const std::string& path) {
  return mechanism_from_json(read_text_file(path));
}

SweepSpec sweep_spec_from_json(const std::string& json_text) {
  const json doc = parse_json(json_text, "sweep spec");
  reject_unknown_keys(doc,
                      {"mechanism", "joint_count", "root_tension_N",
                       "inter_axial_m", "lever_arm_m", "grid_cap", "fixed",
                       "ranges"},
                      "sweep spec");

  SweepSpec spec;
  spec.family = get_string(doc, "mechanism");
  const Mechanism preset = preset_mechanism(spec.family);

  spec.chain.joint_count = get_int(doc, "joint_count");
  spec.chain.root_tension_N = get_number(doc, "root_tension_N");
  spec.chain.inter_axial_m = doc.contains("inter_axial_m")
                                 ? get_number(doc, "inter_axial_m")
                                 : preset.inter_axial_m;
  if (doc.contains("lever_arm_m")) {
    spec.chain.lever_arm_m = get_number(doc, "lever_arm_m");
  }
  if (doc.contains("grid_cap")) {
    const int cap = get_int(doc, "grid_cap");
    require(cap >= 1, errc::parse, "grid_cap must be >= 1");
    spec.grid_cap = static_cast<std::size_t>(cap);
  }
  if (doc.contains("fixed")) {
    const json& fixed = doc["fixed"];
    require(fixed.is_object(), errc::parse, "fixed must be an object");
    for (const auto& [key, value] : fixed.items()) {
      require(value.is_number(), errc::parse,
              "fixed value '" + key + "' must be a number");
      spec.fixed[key] = value.get<double>();
    }
  }
  require(doc.contains("ranges"), errc::parse, "missing required key 'ranges'");
  const json& ranges = doc["ranges"];
  require(ranges.is_object(), errc::parse, "ranges must be an object");
  for (const auto& [key, value] : ranges.items()) {
    require(value.is_object(), errc::parse,
            "range '" + key + "' must be an object");
    reject_unknown_keys(value, {"min", "max", "steps"}, "range");
    ParamRange range;
    range.min = get_number(value, "min");
    range.max = get_number(value, "max");
    range.steps = get_int(value, "steps");
    spec.ranges[key] = range;
  }
  return spec;
}

Requirement requirement_from_json(const std::string& json_text) {
  const json doc = parse_json(json_text, "requirement");
  reject_unknown_keys(doc,
                      {"min_tip_torque_Nm", "max_width_m", "joint_count",
                       "max_tension_N"},
                      "requirement");
  Requirement req;
  req.min_tip_torque_Nm = get_number(doc, "min_tip_torque_Nm");
  req.max_width_m = get_number(doc, "max_width_m");
  req.joint_count = get_int(doc, "joint_count");
  req.max_tension_N = get_number(doc, "max_tension_N");
  req.validate();
  return req;
}

std::string recommendation_to_json(const Recommendation& rec) {
  json doc;
  doc["requirement"] = {
      {"min_tip_torque_Nm", rec.requirement.min_tip_torque_Nm},
      {"max_width_m", rec.requirement.max_width_m},
      {"joint_count", rec.requirement.joint_count},
      {"max_tension_N", rec.requirement.max_tension_N},
  };
  doc["ranked"] = json::array();
  for (const RankedDesign& d : rec.ranked) {
    json profile = json::array();
    for (const ProfileEntry& e : d.profile.entries) {
      profile.push_back({{"joint_index", e.joint_index},
                         {"tension_N", e.tension_N},
                         {"torque_Nm", e.torque_Nm}});
    }
    doc["ranked"].push_back({{"mechanism", d.mech.family()},
                             {"name", d.mech.display_name()},
                             {"tip_torque_Nm", d.tip_torque_Nm},
                             {"margin_Nm", d.margin_Nm},
                             {"width_m", d.width_m},
                             {"part_count", d.mech.part_count()},
                             {"profile", profile}});
  }
  doc["infeasible"] = json::array();
  for (const InfeasibleDesign& d : rec.infeasible) {
    doc["infeasible"].push_back({{"mechanism", d.mechanism},
                                 {"binding_constraint", d.binding_constraint},
                                 {"tip_torque_Nm", d.tip_torque_Nm},
                                 {"width_m", d.width_m}});
  }
  return doc.dump(2) + "\n";
}

std::string calibration_report_to_json(const CalibrationReport& report) {
  auto fit_json = [](const AffineFit& fit, double mu) {
    return json{{"slope_Nm_per_N", fit.slope_Nm_per_N},
                {"intercept_Nm", fit.intercept_Nm},
                {"r_squared", fit.r_squared},
                {"engagement_tension_N", fit.engagement_tension_N},
                {"mu_effective", mu}};
  };
  json doc;
  doc["mechanism"] = report.mechanism;
  doc["record_count"] = report.record_count;
  doc["free_intercept"] = fit_json(report.free_intercept,
                                   report.mu_free_intercept);
  doc["through_origin"] = fit_json(report.through_origin,
                                   report.mu_through_origin);
  return doc.dump(2) + "\n";
}

}  // namespace jamstring
