/* jamstring: modeling toolkit for tendon-driven jamming string
 * configurations (bead, comb and radial-layer joint chains).
 *
 * All entry points return a jam_status; JAM_OK is 0. On failure the handle
 * and value outputs are left untouched and jam_last_error() returns a
 * thread-local description of the problem. Handles are opaque and must be
 * released with their matching _free function. Unless noted, inputs are SI:
 * meters, newtons, newton-meters, degrees for angles.
 */

#ifndef JAMSTRING_H
#define JAMSTRING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define JAM_API __declspec(dllexport)
#else
#define JAM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t jam_status;

enum {
  JAM_OK = 0,
  JAM_ERR_DOMAIN = 1,         /* argument outside the model's domain */
  JAM_ERR_PARSE = 2,          /* malformed config / spec / CSV document */
  JAM_ERR_INGESTION = 3,      /* measurement data rejected */
  JAM_ERR_DEGENERATE_FIT = 4, /* not enough distinct points */
  JAM_ERR_CALIBRATION = 5,    /* fit cannot be inverted to mu */
  JAM_ERR_NO_HALVING = 6,     /* lossless chain never halves */
  JAM_ERR_INFEASIBLE = 7,     /* valid request, empty result */
  JAM_ERR_UNKNOWN_FIELD = 8,  /* objective or column name not known */
  JAM_ERR_CAP_EXCEEDED = 9,   /* sweep grid larger than the cap */
  JAM_ERR_IO = 10,            /* file could not be read or written */
  JAM_ERR_INVALID = 11,       /* null handle or bad argument */
  JAM_ERR_INTERNAL = 12
};

/* Wire route variants for path-length computation. */
enum {
  JAM_ROUTE_CONICAL_PIVOT = 0,
  JAM_ROUTE_THROUGH_HOLE_STRAIGHT = 1
};

JAM_API const char* jam_version(void);

/* Thread-local message for the most recent failure on this thread. */
JAM_API const char* jam_last_error(void);

JAM_API const char* jam_status_name(jam_status status);

/* ---- mechanisms ------------------------------------------------------- */

typedef struct jam_mechanism jam_mechanism;

/* Parse a mechanism config document (JSON; see the bundled presets). */
JAM_API jam_status jam_mechanism_from_json(const char* json_text,
                                           jam_mechanism** out);
JAM_API jam_status jam_mechanism_load(const char* path, jam_mechanism** out);

/* One of the three prototype presets: "bead", "comb" or "radial". */
JAM_API jam_status jam_mechanism_preset(const char* family,
                                        jam_mechanism** out);
JAM_API void jam_mechanism_free(jam_mechanism* mech);

/* Family tag as a static string: "bead", "comb" or "radial". */
JAM_API jam_status jam_mechanism_family(const jam_mechanism* mech,
                                        const char** out);
JAM_API jam_status jam_mechanism_mu(const jam_mechanism* mech, double* out);
JAM_API jam_status jam_mechanism_set_mu(jam_mechanism* mech, double mu);
JAM_API jam_status jam_mechanism_retention(const jam_mechanism* mech,
                                           double* out);
JAM_API jam_status jam_mechanism_set_retention(jam_mechanism* mech, double k);
JAM_API jam_status jam_mechanism_engagement_tension(const jam_mechanism* mech,
                                                    double* out_N);
JAM_API jam_status jam_mechanism_set_engagement_tension(jam_mechanism* mech,
                                                        double tension_N);
JAM_API jam_status jam_mechanism_inter_axial(const jam_mechanism* mech,
                                             double* out_m);
JAM_API jam_status jam_mechanism_width(const jam_mechanism* mech,
                                       double* out_m);
JAM_API jam_status jam_mechanism_part_count(const jam_mechanism* mech,
                                            int32_t* out);

/* Holding torque of one joint at the given local wire tension. */
JAM_API jam_status jam_mechanism_torque(const jam_mechanism* mech,
                                        double tension_N, double* out_Nm);

/* d(torque)/d(tension) past the engagement threshold. */
JAM_API jam_status jam_mechanism_torque_slope(const jam_mechanism* mech,
                                              double* out_Nm_per_N);

/* Range of motion per bending side, degrees. */
JAM_API jam_status jam_mechanism_max_joint_angle(const jam_mechanism* mech,
                                                 double* out_deg);

/* ---- closed-form torque models ---------------------------------------- */

/* mu * R * T. */
JAM_API jam_status jam_bead_holding_torque(double mu, double contact_radius_m,
                                           double tension_N, double* out_Nm);

/* (2/3) * mu * F_n * R: uniform-pressure disc friction torque. */
JAM_API jam_status jam_disc_friction_torque(double mu, double normal_load_N,
                                            double radius_m, double* out_Nm);

/* Midpoint-rule quadrature of the same disc integral. */
JAM_API jam_status jam_disc_friction_torque_numeric(
    double mu, double normal_load_N, double radius_m, int32_t radial_cells,
    int32_t angular_cells, double* out_Nm);

/* (2a-1) disc surfaces under the same normal load. */
JAM_API jam_status jam_comb_holding_torque(double mu, double plate_radius_m,
                                           int32_t plate_count,
                                           double normal_load_N,
                                           double* out_Nm);

/* 2 * T * sin(wrap/2): ideal frictionless pulley. */
JAM_API jam_status jam_normal_load_from_tension(double tension_N,
                                                double wrap_angle_deg,
                                                double* out_N);

/* Concentric layer contact radii, outermost first; out_radii must hold
 * layer_count values. */
JAM_API jam_status jam_layer_radii(double outer_radius_m, int32_t layer_count,
                                   double wall_thickness_m, double clearance_m,
                                   double* out_radii);

/* sum_i mu * R_i * T over the concentric layers. */
JAM_API jam_status jam_radial_holding_torque(double mu, double outer_radius_m,
                                             int32_t layer_count,
                                             double wall_thickness_m,
                                             double clearance_m,
                                             double tension_N, double* out_Nm);

/* ---- chains and tension propagation ------------------------------------ */

typedef struct jam_chain jam_chain;

JAM_API jam_status jam_chain_create(int32_t joint_count, double inter_axial_m,
                                    double lever_arm_m, double root_tension_N,
                                    jam_chain** out);
JAM_API void jam_chain_free(jam_chain* chain);

/* root * k^(joint_index-1); joint 1 sees the full root tension. */
JAM_API jam_status jam_joint_tension(double root_tension_N, double retention_k,
                                     int32_t joint_index, double* out_N);

/* Smallest n >= 1 with k^n <= 1/2; JAM_ERR_NO_HALVING when k = 1. */
JAM_API jam_status jam_halving_joint(double retention_k, int32_t* out);

typedef struct jam_profile jam_profile;

/* Per-joint torque profile using the mechanism's retention factor. */
JAM_API jam_status jam_tip_torque_profile(const jam_mechanism* mech,
                                          const jam_chain* chain,
                                          jam_profile** out);
JAM_API int32_t jam_profile_size(const jam_profile* profile);
JAM_API jam_status jam_profile_entry(const jam_profile* profile, int32_t index,
                                     int32_t* out_joint_index,
                                     double* out_tension_N,
                                     double* out_torque_Nm);
JAM_API void jam_profile_free(jam_profile* profile);

/* Smallest joint index where a's torque >= b's torque; *out_joint is 0 when
 * b stays ahead over the whole chain. */
JAM_API jam_status jam_crossover_joint(const jam_mechanism* a,
                                       const jam_mechanism* b,
                                       const jam_chain* chain,
                                       int32_t* out_joint);

/* ---- planar chain geometry --------------------------------------------- */

/* Pose under cumulative planar rotations: writes joint_count+1 (x, y) pairs
 * into out_xy_m (the pivot centers followed by the tip), so out_xy_m must
 * hold 2*(angle_count+1) doubles. */
JAM_API jam_status jam_chain_pose(const jam_chain* chain,
                                  const double* angles_deg,
                                  int32_t angle_count, double* out_xy_m);

/* Wire route length for the posed chain. route is a JAM_ROUTE_* value.
 * max_abs_angle_deg > 0 turns on range-of-motion checking. */
JAM_API jam_status jam_wire_path_length(const jam_chain* chain,
                                        const double* angles_deg,
                                        int32_t angle_count, int32_t route,
                                        double max_abs_angle_deg,
                                        double* out_m);

/* ---- measurements and calibration -------------------------------------- */

typedef struct jam_measurements jam_measurements;

/* Measurement CSV schema: required columns tension_N and torque_Nm, optional
 * mechanism and joint_index, header mandatory, no other columns. */
JAM_API jam_status jam_measurements_from_csv(const char* csv_text,
                                             jam_measurements** out);
JAM_API jam_status jam_measurements_load(const char* path,
                                         jam_measurements** out);

/* Records tagged for one mechanism plus all untagged records. */
JAM_API jam_status jam_measurements_select(const jam_measurements* set,
                                           const char* mechanism_id,
                                           jam_measurements** out);
JAM_API int32_t jam_measurements_size(const jam_measurements* set);
JAM_API jam_status jam_measurements_record(const jam_measurements* set,
                                           int32_t index,
                                           int32_t* out_joint_index,
                                           double* out_tension_N,
                                           double* out_torque_Nm);
JAM_API jam_status jam_measurements_set_lever_arm(jam_measurements* set,
                                                  double lever_arm_m);
JAM_API void jam_measurements_free(jam_measurements* set);

/* Least-squares line through (tension, torque) points. through_origin != 0
 * forces a zero intercept (uncentered r^2). engagement tension is
 * -intercept/slope when the intercept is negative, else 0. */
JAM_API jam_status jam_fit_affine(const double* tension_N,
                                  const double* torque_Nm, int32_t count,
                                  int32_t through_origin, double* out_slope,
                                  double* out_intercept, double* out_r_squared,
                                  double* out_engagement_tension_N);
JAM_API jam_status jam_measurements_fit(const jam_measurements* set,
                                        int32_t through_origin,
                                        double* out_slope,
                                        double* out_intercept,
                                        double* out_r_squared,
                                        double* out_engagement_tension_N);

/* mu that reproduces the fitted torque-vs-tension slope for this geometry. */
JAM_API jam_status jam_calibrate_mu(const jam_mechanism* mech,
                                    double slope_Nm_per_N, double* out_mu);

/* mu from one measured joint of a chain driven at root_tension_N; accounts
 * for the tension decay between the root and that joint. */
JAM_API jam_status jam_calibrate_mu_from_anchor(const jam_mechanism* mech,
                                                int32_t joint_index,
                                                double root_tension_N,
                                                double torque_Nm,
                                                double* out_mu);

/* ---- design exploration ------------------------------------------------ */

typedef struct jam_design_table jam_design_table;

/* Run a sweep spec document (JSON; see header docs in the repo README). */
JAM_API jam_status jam_sweep_run(const char* spec_json,
                                 jam_design_table** out);
JAM_API jam_status jam_design_table_from_csv(const char* csv_text,
                                             jam_design_table** out);
JAM_API void jam_design_table_free(jam_design_table* table);
JAM_API int32_t jam_design_table_size(const jam_design_table* table);

/* Serializes the table; free the returned text with jam_text_free. */
JAM_API jam_status jam_design_table_to_csv(const jam_design_table* table,
                                           char** out_text);

/* objectives: comma-separated field:max / field:min pairs, e.g.
 * "tip_torque_Nm:max,width_m:min". */
JAM_API jam_status jam_pareto_front(const jam_design_table* table,
                                    const char* objectives,
                                    jam_design_table** out);

/* Ranked recommendation over candidate mechanisms against a requirement
 * document (JSON keys min_tip_torque_Nm, max_width_m, joint_count,
 * max_tension_N). Returns a JSON report; free with jam_text_free. */
JAM_API jam_status jam_recommend(const jam_mechanism* const* mechs,
                                 int32_t count, const char* requirement_json,
                                 char** out_report_json);

JAM_API void jam_text_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* JAMSTRING_H */
