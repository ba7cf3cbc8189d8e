#include "jamstring.h"

#include <cstring>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "explorer.hpp"
#include "geometry.hpp"
#include "mechanism.hpp"
#include "tension.hpp"
#include "torque_models.hpp"

namespace {

thread_local std::string g_last_error;

jam_status status_from(jamstring::errc code) {
  using jamstring::errc;
  switch (code) {
    case errc::domain: return JAM_ERR_DOMAIN;
    case errc::parse: return JAM_ERR_PARSE;
    case errc::ingestion: return JAM_ERR_INGESTION;
    case errc::degenerate_fit: return JAM_ERR_DEGENERATE_FIT;
    case errc::calibration: return JAM_ERR_CALIBRATION;
    case errc::no_halving: return JAM_ERR_NO_HALVING;
    case errc::infeasible: return JAM_ERR_INFEASIBLE;
    case errc::unknown_field: return JAM_ERR_UNKNOWN_FIELD;
    case errc::cap_exceeded: return JAM_ERR_CAP_EXCEEDED;
    case errc::io: return JAM_ERR_IO;
  }
  return JAM_ERR_INTERNAL;
}

template <typename Fn>
jam_status guarded(Fn&& fn) {
  try {
    fn();
    return JAM_OK;
  } catch (const jamstring::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return JAM_ERR_INTERNAL;
  }
}

jam_status invalid(const char* msg) {
  g_last_error = msg;
  return JAM_ERR_INVALID;
}

char* copy_text(const std::string& text) {
  char* out = new char[text.size() + 1];
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

}  // namespace

struct jam_mechanism {
  jamstring::Mechanism impl;
};

struct jam_chain {
  jamstring::ChainConfig impl;
};

struct jam_profile {
  jamstring::TorqueProfile impl;
};

struct jam_measurements {
  jamstring::MeasurementSet impl;
};

struct jam_design_table {
  std::vector<jamstring::DesignRecord> records;
};

extern "C" {

const char* jam_version(void) { return "0.1.0"; }

const char* jam_last_error(void) { return g_last_error.c_str(); }

const char* jam_status_name(jam_status status) {
  switch (status) {
    case JAM_OK: return "ok";
    case JAM_ERR_DOMAIN: return "domain";
    case JAM_ERR_PARSE: return "parse";
    case JAM_ERR_INGESTION: return "ingestion";
    case JAM_ERR_DEGENERATE_FIT: return "degenerate_fit";
    case JAM_ERR_CALIBRATION: return "calibration";
    case JAM_ERR_NO_HALVING: return "no_halving";
    case JAM_ERR_INFEASIBLE: return "infeasible";
    case JAM_ERR_UNKNOWN_FIELD: return "unknown_field";
    case JAM_ERR_CAP_EXCEEDED: return "cap_exceeded";
    case JAM_ERR_IO: return "io";
    case JAM_ERR_INVALID: return "invalid";
    default: return "internal";
  }
}

jam_status jam_mechanism_from_json(const char* json_text,
                                   jam_mechanism** out) {
  if (!json_text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_mechanism{jamstring::mechanism_from_json(json_text)};
  });
}

jam_status jam_mechanism_load(const char* path, jam_mechanism** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_mechanism{jamstring::load_mechanism_file(path)};
  });
}

jam_status jam_mechanism_preset(const char* family, jam_mechanism** out) {
  if (!family || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_mechanism{jamstring::preset_mechanism(family)};
  });
}

void jam_mechanism_free(jam_mechanism* mech) { delete mech; }

jam_status jam_mechanism_family(const jam_mechanism* mech, const char** out) {
  if (!mech || !out) return invalid("null argument");
  *out = mech->impl.family();
  return JAM_OK;
}

jam_status jam_mechanism_mu(const jam_mechanism* mech, double* out) {
  if (!mech || !out) return invalid("null argument");
  *out = mech->impl.material().mu;
  return JAM_OK;
}

jam_status jam_mechanism_set_mu(jam_mechanism* mech, double mu) {
  if (!mech) return invalid("null argument");
  return guarded([&] { mech->impl.set_mu(mu); });
}

jam_status jam_mechanism_retention(const jam_mechanism* mech, double* out) {
  if (!mech || !out) return invalid("null argument");
  *out = mech->impl.retention_k;
  return JAM_OK;
}

jam_status jam_mechanism_set_retention(jam_mechanism* mech, double k) {
  if (!mech) return invalid("null argument");
  return guarded([&] {
    jamstring::AttenuationModel model{k};
    model.validate();
    mech->impl.retention_k = k;
  });
}

jam_status jam_mechanism_engagement_tension(const jam_mechanism* mech,
                                            double* out_N) {
  if (!mech || !out_N) return invalid("null argument");
  *out_N = mech->impl.engagement_tension_N;
  return JAM_OK;
}

jam_status jam_mechanism_set_engagement_tension(jam_mechanism* mech,
                                                double tension_N) {
  if (!mech) return invalid("null argument");
  return guarded([&] {
    jamstring::require(tension_N >= 0.0, jamstring::errc::domain,
                       "engagement tension must be >= 0");
    mech->impl.engagement_tension_N = tension_N;
  });
}

jam_status jam_mechanism_inter_axial(const jam_mechanism* mech,
                                     double* out_m) {
  if (!mech || !out_m) return invalid("null argument");
  *out_m = mech->impl.inter_axial_m;
  return JAM_OK;
}

jam_status jam_mechanism_width(const jam_mechanism* mech, double* out_m) {
  if (!mech || !out_m) return invalid("null argument");
  return guarded([&] { *out_m = mech->impl.width_m(); });
}

jam_status jam_mechanism_part_count(const jam_mechanism* mech, int32_t* out) {
  if (!mech || !out) return invalid("null argument");
  *out = mech->impl.part_count();
  return JAM_OK;
}

jam_status jam_mechanism_torque(const jam_mechanism* mech, double tension_N,
                                double* out_Nm) {
  if (!mech || !out_Nm) return invalid("null argument");
  return guarded([&] { *out_Nm = mech->impl.torque_at_tension(tension_N); });
}

jam_status jam_mechanism_torque_slope(const jam_mechanism* mech,
                                      double* out_Nm_per_N) {
  if (!mech || !out_Nm_per_N) return invalid("null argument");
  return guarded([&] { *out_Nm_per_N = mech->impl.torque_slope(); });
}

jam_status jam_mechanism_max_joint_angle(const jam_mechanism* mech,
                                         double* out_deg) {
  if (!mech || !out_deg) return invalid("null argument");
  return guarded([&] { *out_deg = jamstring::max_joint_angle_deg(mech->impl); });
}

jam_status jam_bead_holding_torque(double mu, double contact_radius_m,
                                   double tension_N, double* out_Nm) {
  if (!out_Nm) return invalid("null argument");
  return guarded([&] {
    jamstring::BeadParams params;
    params.contact_radius_m = contact_radius_m;
    params.material.mu = mu;
    *out_Nm = jamstring::bead_holding_torque(params, tension_N);
  });
}

jam_status jam_disc_friction_torque(double mu, double normal_load_N,
                                    double radius_m, double* out_Nm) {
  if (!out_Nm) return invalid("null argument");
  return guarded([&] {
    *out_Nm = jamstring::disc_friction_torque(mu, normal_load_N, radius_m);
  });
}

jam_status jam_disc_friction_torque_numeric(double mu, double normal_load_N,
                                            double radius_m,
                                            int32_t radial_cells,
                                            int32_t angular_cells,
                                            double* out_Nm) {
  if (!out_Nm) return invalid("null argument");
  return guarded([&] {
    *out_Nm = jamstring::disc_friction_torque_numeric(
        mu, normal_load_N, radius_m, radial_cells, angular_cells);
  });
}

jam_status jam_comb_holding_torque(double mu, double plate_radius_m,
                                   int32_t plate_count, double normal_load_N,
                                   double* out_Nm) {
  if (!out_Nm) return invalid("null argument");
  return guarded([&] {
    jamstring::CombParams params;
    params.plate_radius_m = plate_radius_m;
    params.plate_count = plate_count;
    params.plate_thickness_m = 1.0;  // irrelevant to the torque model
    params.clearance_m = 1.0;
    params.material.mu = mu;
    *out_Nm = jamstring::comb_holding_torque(params, normal_load_N);
  });
}

jam_status jam_normal_load_from_tension(double tension_N,
                                        double wrap_angle_deg, double* out_N) {
  if (!out_N) return invalid("null argument");
  return guarded([&] {
    *out_N = jamstring::normal_load_from_tension(tension_N, wrap_angle_deg);
  });
}

jam_status jam_layer_radii(double outer_radius_m, int32_t layer_count,
                           double wall_thickness_m, double clearance_m,
                           double* out_radii) {
  if (!out_radii) return invalid("null argument");
  return guarded([&] {
    jamstring::RadialParams params;
    params.outer_radius_m = outer_radius_m;
    params.layer_count = layer_count;
    params.wall_thickness_m = wall_thickness_m;
    params.clearance_m = clearance_m;
    const std::vector<double> radii = jamstring::layer_radii(params);
    for (std::size_t i = 0; i < radii.size(); ++i) out_radii[i] = radii[i];
  });
}

jam_status jam_radial_holding_torque(double mu, double outer_radius_m,
                                     int32_t layer_count,
                                     double wall_thickness_m,
                                     double clearance_m, double tension_N,
                                     double* out_Nm) {
  if (!out_Nm) return invalid("null argument");
  return guarded([&] {
    jamstring::RadialParams params;
    params.outer_radius_m = outer_radius_m;
    params.layer_count = layer_count;
    params.wall_thickness_m = wall_thickness_m;
    params.clearance_m = clearance_m;
    params.material.mu = mu;
    *out_Nm = jamstring::radial_holding_torque(params, tension_N);
  });
}

jam_status jam_chain_create(int32_t joint_count, double inter_axial_m,
                            double lever_arm_m, double root_tension_N,
                            jam_chain** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    jamstring::ChainConfig chain;
    chain.joint_count = joint_count;
    chain.inter_axial_m = inter_axial_m;
    chain.lever_arm_m = lever_arm_m;
    chain.root_tension_N = root_tension_N;
    chain.validate();
    *out = new jam_chain{chain};
  });
}

void jam_chain_free(jam_chain* chain) { delete chain; }

jam_status jam_joint_tension(double root_tension_N, double retention_k,
                             int32_t joint_index, double* out_N) {
  if (!out_N) return invalid("null argument");
  return guarded([&] {
    *out_N = jamstring::joint_tension(
        root_tension_N, jamstring::AttenuationModel{retention_k}, joint_index);
  });
}

jam_status jam_halving_joint(double retention_k, int32_t* out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    *out = jamstring::halving_joint(jamstring::AttenuationModel{retention_k});
  });
}

jam_status jam_tip_torque_profile(const jam_mechanism* mech,
                                  const jam_chain* chain, jam_profile** out) {
  if (!mech || !chain || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_profile{
        jamstring::tip_torque_profile(mech->impl, chain->impl)};
  });
}

int32_t jam_profile_size(const jam_profile* profile) {
  return profile ? static_cast<int32_t>(profile->impl.entries.size()) : 0;
}

jam_status jam_profile_entry(const jam_profile* profile, int32_t index,
                             int32_t* out_joint_index, double* out_tension_N,
                             double* out_torque_Nm) {
  if (!profile) return invalid("null argument");
  if (index < 0 || index >= jam_profile_size(profile)) {
    return invalid("profile index out of range");
  }
  const jamstring::ProfileEntry& e = profile->impl.entries[index];
  if (out_joint_index) *out_joint_index = e.joint_index;
  if (out_tension_N) *out_tension_N = e.tension_N;
  if (out_torque_Nm) *out_torque_Nm = e.torque_Nm;
  return JAM_OK;
}

void jam_profile_free(jam_profile* profile) { delete profile; }

jam_status jam_crossover_joint(const jam_mechanism* a, const jam_mechanism* b,
                               const jam_chain* chain, int32_t* out_joint) {
  if (!a || !b || !chain || !out_joint) return invalid("null argument");
  return guarded([&] {
    const std::optional<int> joint =
        jamstring::crossover_joint(a->impl, b->impl, chain->impl);
    *out_joint = joint.value_or(0);
  });
}

jam_status jam_chain_pose(const jam_chain* chain, const double* angles_deg,
                          int32_t angle_count, double* out_xy_m) {
  if (!chain || !angles_deg || !out_xy_m) return invalid("null argument");
  if (angle_count < 0) return invalid("negative angle count");
  return guarded([&] {
    const std::vector<jamstring::Point2> points = jamstring::chain_pose(
        chain->impl, std::span<const double>(angles_deg,
                                             static_cast<size_t>(angle_count)));
    for (std::size_t i = 0; i < points.size(); ++i) {
      out_xy_m[2 * i] = points[i].x_m;
      out_xy_m[2 * i + 1] = points[i].y_m;
    }
  });
}

jam_status jam_wire_path_length(const jam_chain* chain,
                                const double* angles_deg, int32_t angle_count,
                                int32_t route, double max_abs_angle_deg,
                                double* out_m) {
  if (!chain || !angles_deg || !out_m) return invalid("null argument");
  if (angle_count < 0) return invalid("negative angle count");
  if (route != JAM_ROUTE_CONICAL_PIVOT &&
      route != JAM_ROUTE_THROUGH_HOLE_STRAIGHT) {
    return invalid("unknown wire route");
  }
  return guarded([&] {
    std::optional<double> limit;
    if (max_abs_angle_deg > 0.0) limit = max_abs_angle_deg;
    *out_m = jamstring::wire_path_length(
        chain->impl,
        std::span<const double>(angles_deg, static_cast<size_t>(angle_count)),
        route == JAM_ROUTE_CONICAL_PIVOT
            ? jamstring::WireRoute::conical_pivot
            : jamstring::WireRoute::through_hole_straight,
        limit);
  });
}

jam_status jam_measurements_from_csv(const char* csv_text,
                                     jam_measurements** out) {
  if (!csv_text || !out) return invalid("null argument");
  return guarded([&] {
    std::istringstream in{std::string(csv_text)};
    *out = new jam_measurements{jamstring::load_measurements(in)};
  });
}

jam_status jam_measurements_load(const char* path, jam_measurements** out) {
  if (!path || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_measurements{jamstring::load_measurements_file(path)};
  });
}

jam_status jam_measurements_select(const jam_measurements* set,
                                   const char* mechanism_id,
                                   jam_measurements** out) {
  if (!set || !mechanism_id || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_measurements{
        jamstring::select_mechanism(set->impl, mechanism_id)};
  });
}

int32_t jam_measurements_size(const jam_measurements* set) {
  return set ? static_cast<int32_t>(set->impl.records.size()) : 0;
}

jam_status jam_measurements_record(const jam_measurements* set, int32_t index,
                                   int32_t* out_joint_index,
                                   double* out_tension_N,
                                   double* out_torque_Nm) {
  if (!set) return invalid("null argument");
  if (index < 0 || index >= jam_measurements_size(set)) {
    return invalid("measurement index out of range");
  }
  const jamstring::MeasurementRecord& rec = set->impl.records[index];
  if (out_joint_index) *out_joint_index = rec.joint_index;
  if (out_tension_N) *out_tension_N = rec.tension_N;
  if (out_torque_Nm) *out_torque_Nm = rec.torque_Nm;
  return JAM_OK;
}

jam_status jam_measurements_set_lever_arm(jam_measurements* set,
                                          double lever_arm_m) {
  if (!set) return invalid("null argument");
  return guarded([&] {
    jamstring::require(lever_arm_m > 0.0, jamstring::errc::domain,
                       "lever arm must be > 0");
    set->impl.lever_arm_m = lever_arm_m;
  });
}

void jam_measurements_free(jam_measurements* set) { delete set; }

jam_status jam_fit_affine(const double* tension_N, const double* torque_Nm,
                          int32_t count, int32_t through_origin,
                          double* out_slope, double* out_intercept,
                          double* out_r_squared,
                          double* out_engagement_tension_N) {
  if (!tension_N || !torque_Nm) return invalid("null argument");
  if (count < 0) return invalid("negative count");
  return guarded([&] {
    const jamstring::AffineFit fit = jamstring::fit_affine(
        std::span<const double>(tension_N, static_cast<size_t>(count)),
        std::span<const double>(torque_Nm, static_cast<size_t>(count)),
        through_origin != 0);
    if (out_slope) *out_slope = fit.slope_Nm_per_N;
    if (out_intercept) *out_intercept = fit.intercept_Nm;
    if (out_r_squared) *out_r_squared = fit.r_squared;
    if (out_engagement_tension_N) {
      *out_engagement_tension_N = fit.engagement_tension_N;
    }
  });
}

jam_status jam_measurements_fit(const jam_measurements* set,
                                int32_t through_origin, double* out_slope,
                                double* out_intercept, double* out_r_squared,
                                double* out_engagement_tension_N) {
  if (!set) return invalid("null argument");
  return guarded([&] {
    const jamstring::AffineFit fit =
        jamstring::fit_affine(set->impl, through_origin != 0);
    if (out_slope) *out_slope = fit.slope_Nm_per_N;
    if (out_intercept) *out_intercept = fit.intercept_Nm;
    if (out_r_squared) *out_r_squared = fit.r_squared;
    if (out_engagement_tension_N) {
      *out_engagement_tension_N = fit.engagement_tension_N;
    }
  });
}

jam_status jam_calibrate_mu(const jam_mechanism* mech, double slope_Nm_per_N,
                            double* out_mu) {
  if (!mech || !out_mu) return invalid("null argument");
  return guarded([&] {
    jamstring::AffineFit fit;
    fit.slope_Nm_per_N = slope_Nm_per_N;
    *out_mu = jamstring::calibrate_mu(mech->impl, fit);
  });
}

jam_status jam_calibrate_mu_from_anchor(const jam_mechanism* mech,
                                        int32_t joint_index,
                                        double root_tension_N,
                                        double torque_Nm, double* out_mu) {
  if (!mech || !out_mu) return invalid("null argument");
  return guarded([&] {
    *out_mu = jamstring::calibrate_mu_from_anchor(mech->impl, joint_index,
                                                  root_tension_N, torque_Nm);
  });
}

jam_status jam_sweep_run(const char* spec_json, jam_design_table** out) {
  if (!spec_json || !out) return invalid("null argument");
  return guarded([&] {
    const jamstring::SweepSpec spec =
        jamstring::sweep_spec_from_json(spec_json);
    *out = new jam_design_table{jamstring::run_sweep(spec)};
  });
}

jam_status jam_design_table_from_csv(const char* csv_text,
                                     jam_design_table** out) {
  if (!csv_text || !out) return invalid("null argument");
  return guarded([&] {
    *out = new jam_design_table{jamstring::records_from_csv(csv_text)};
  });
}

void jam_design_table_free(jam_design_table* table) { delete table; }

int32_t jam_design_table_size(const jam_design_table* table) {
  return table ? static_cast<int32_t>(table->records.size()) : 0;
}

jam_status jam_design_table_to_csv(const jam_design_table* table,
                                   char** out_text) {
  if (!table || !out_text) return invalid("null argument");
  return guarded(
      [&] { *out_text = copy_text(jamstring::records_to_csv(table->records)); });
}

jam_status jam_pareto_front(const jam_design_table* table,
                            const char* objectives, jam_design_table** out) {
  if (!table || !objectives || !out) return invalid("null argument");
  return guarded([&] {
    const std::vector<jamstring::Objective> objs =
        jamstring::parse_objectives(objectives);
    *out = new jam_design_table{jamstring::pareto_front(table->records, objs)};
  });
}

jam_status jam_recommend(const jam_mechanism* const* mechs, int32_t count,
                         const char* requirement_json,
                         char** out_report_json) {
  if (!mechs || !requirement_json || !out_report_json) {
    return invalid("null argument");
  }
  if (count < 0) return invalid("negative count");
  return guarded([&] {
    std::vector<jamstring::Mechanism> candidates;
    candidates.reserve(count);
    for (int32_t i = 0; i < count; ++i) {
      jamstring::require(mechs[i] != nullptr, jamstring::errc::domain,
                         "null mechanism handle in candidate list");
      candidates.push_back(mechs[i]->impl);
    }
    const jamstring::Requirement req =
        jamstring::requirement_from_json(requirement_json);
    const jamstring::Recommendation rec =
        jamstring::recommend(req, candidates);
    *out_report_json = copy_text(jamstring::recommendation_to_json(rec));
  });
}

void jam_text_free(char* text) { delete[] text; }

}  // extern "C"
