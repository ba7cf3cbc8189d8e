// Exercises the shared-library surface exactly as an external consumer
// would: only jamstring.h, opaque handles and status codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "jamstring.h"

namespace {

const char* kBeadJson = R"({
  "mechanism": "bead", "units": "mm",
  "contact_radius": 6.0, "cone_apex_angle_deg": 70.0,
  "mu": 0.43333333333333335, "attenuation": {"k": 0.985}
})";

jam_mechanism* mech_from(const char* json) {
  jam_mechanism* mech = nullptr;
  REQUIRE(jam_mechanism_from_json(json, &mech) == JAM_OK);
  return mech;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(jam_version() != nullptr);
  CHECK(std::string(jam_status_name(JAM_OK)) == "ok");
  CHECK(std::string(jam_status_name(JAM_ERR_DOMAIN)) == "domain");
}

TEST_CASE("mechanism lifecycle and attributes") {
  jam_mechanism* mech = mech_from(kBeadJson);

  const char* family = nullptr;
  CHECK(jam_mechanism_family(mech, &family) == JAM_OK);
  CHECK(std::string(family) == "bead");

  double mu = 0.0;
  CHECK(jam_mechanism_mu(mech, &mu) == JAM_OK);
  CHECK(mu == doctest::Approx(0.4333).epsilon(1e-3));

  double torque = 0.0;
  CHECK(jam_mechanism_torque(mech, 50.0, &torque) == JAM_OK);
  CHECK(torque == doctest::Approx(0.13).epsilon(1e-12));

  CHECK(jam_mechanism_torque(mech, -1.0, &torque) == JAM_ERR_DOMAIN);
  CHECK(std::strlen(jam_last_error()) > 0);

  double width = 0.0;
  CHECK(jam_mechanism_width(mech, &width) == JAM_OK);
  CHECK(width == doctest::Approx(0.012));

  double angle = 0.0;
  CHECK(jam_mechanism_max_joint_angle(mech, &angle) == JAM_OK);
  CHECK(angle == doctest::Approx(35.0));

  CHECK(jam_mechanism_set_retention(mech, 1.5) == JAM_ERR_DOMAIN);
  CHECK(jam_mechanism_set_retention(mech, 0.9) == JAM_OK);
  double k = 0.0;
  CHECK(jam_mechanism_retention(mech, &k) == JAM_OK);
  CHECK(k == 0.9);

  jam_mechanism_free(mech);
}

TEST_CASE("presets and closed-form models") {
  jam_mechanism* radial = nullptr;
  REQUIRE(jam_mechanism_preset("radial", &radial) == JAM_OK);
  double torque = 0.0;
  CHECK(jam_mechanism_torque(radial, 50.0, &torque) == JAM_OK);
  CHECK(torque == doctest::Approx(0.39).epsilon(1e-12));
  jam_mechanism_free(radial);

  CHECK(jam_mechanism_preset("wheel", &radial) == JAM_ERR_PARSE);

  double value = 0.0;
  CHECK(jam_bead_holding_torque(1.0, 1.0, 1.0, &value) == JAM_OK);
  CHECK(value == 1.0);
  CHECK(jam_disc_friction_torque(1.0, 1.0, 1.0, &value) == JAM_OK);
  CHECK(value == doctest::Approx(2.0 / 3.0));
  CHECK(jam_disc_friction_torque_numeric(1, 1, 1, 100, 100, &value) == JAM_OK);
  CHECK(value == doctest::Approx(2.0 / 3.0).epsilon(1e-4));
  CHECK(jam_comb_holding_torque(1.0, 1.0, 1, 1.0, &value) == JAM_OK);
  CHECK(value == doctest::Approx(2.0 / 3.0));
  CHECK(jam_normal_load_from_tension(50.0, 90.0, &value) == JAM_OK);
  CHECK(value == doctest::Approx(std::sqrt(2.0) * 50.0));

  double radii[3] = {0, 0, 0};
  CHECK(jam_layer_radii(0.0075, 3, 0.0009, 0.00105, radii) == JAM_OK);
  CHECK(radii[2] == doctest::Approx(0.0036).epsilon(1e-12));
  CHECK(jam_layer_radii(0.002, 3, 0.0009, 0.00105, radii) == JAM_ERR_DOMAIN);

  CHECK(jam_radial_holding_torque(0.5, 0.0075, 3, 0.0009, 0.00105, 50.0,
                                  &value) == JAM_OK);
  CHECK(value == doctest::Approx(0.5 * 0.01665 * 50.0).epsilon(1e-12));
}

TEST_CASE("chains, tension decay and profiles") {
  double tension = 0.0;
  CHECK(jam_joint_tension(50.0, 0.94, 2, &tension) == JAM_OK);
  CHECK(tension == doctest::Approx(47.0));
  CHECK(jam_joint_tension(50.0, 0.94, 0, &tension) == JAM_ERR_DOMAIN);

  int32_t halving = 0;
  CHECK(jam_halving_joint(0.94, &halving) == JAM_OK);
  CHECK(halving == 12);
  CHECK(jam_halving_joint(1.0, &halving) == JAM_ERR_NO_HALVING);

  jam_chain* chain = nullptr;
  REQUIRE(jam_chain_create(4, 0.006, 0.122, 50.0, &chain) == JAM_OK);
  CHECK(jam_chain_create(0, 0.006, 0.122, 50.0, &chain) == JAM_ERR_DOMAIN);

  jam_mechanism* mech = mech_from(kBeadJson);
  jam_profile* profile = nullptr;
  REQUIRE(jam_tip_torque_profile(mech, chain, &profile) == JAM_OK);
  REQUIRE(jam_profile_size(profile) == 4);
  int32_t joint = 0;
  double t = 0.0, torque = 0.0;
  CHECK(jam_profile_entry(profile, 0, &joint, &t, &torque) == JAM_OK);
  CHECK(joint == 1);
  CHECK(t == 50.0);
  CHECK(torque == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(jam_profile_entry(profile, 9, &joint, &t, &torque) ==
        JAM_ERR_INVALID);
  jam_profile_free(profile);

  jam_mechanism* stronger = nullptr;
  REQUIRE(jam_mechanism_preset("radial", &stronger) == JAM_OK);
  int32_t cross = -1;
  CHECK(jam_crossover_joint(stronger, mech, chain, &cross) == JAM_OK);
  CHECK(cross == 1);
  CHECK(jam_crossover_joint(mech, stronger, chain, &cross) == JAM_OK);
  CHECK(cross == 0);  // bead never catches the radial preset in 4 joints

  jam_mechanism_free(stronger);
  jam_mechanism_free(mech);
  jam_chain_free(chain);
}

TEST_CASE("pose and wire length") {
  jam_chain* chain = nullptr;
  REQUIRE(jam_chain_create(4, 0.0091, 0.122, 0.0, &chain) == JAM_OK);

  const std::vector<double> angles(4, 0.0);
  std::vector<double> xy(2 * 5, -1.0);
  CHECK(jam_chain_pose(chain, angles.data(), 4, xy.data()) == JAM_OK);
  CHECK(xy[8] == doctest::Approx(0.0364).epsilon(1e-12));
  CHECK(xy[9] == 0.0);

  double length = 0.0;
  CHECK(jam_wire_path_length(chain, angles.data(), 4,
                             JAM_ROUTE_CONICAL_PIVOT, 0.0, &length) == JAM_OK);
  CHECK(length == doctest::Approx(4 * 0.0091).epsilon(1e-12));

  const std::vector<double> bent = {10.0, 40.0, 5.0, 0.0};
  CHECK(jam_wire_path_length(chain, bent.data(), 4, JAM_ROUTE_CONICAL_PIVOT,
                             35.0, &length) == JAM_ERR_DOMAIN);
  CHECK(jam_wire_path_length(chain, bent.data(), 4, 7, 0.0, &length) ==
        JAM_ERR_INVALID);

  CHECK(jam_chain_pose(chain, angles.data(), 3, xy.data()) == JAM_ERR_DOMAIN);
  jam_chain_free(chain);
}

TEST_CASE("measurements, fits and calibration") {
  const char* csv =
      "mechanism,joint_index,tension_N,torque_Nm\n"
      "radial,1,10,0.078\n"
      "radial,1,20,0.156\n"
      "radial,1,50,0.39\n";
  jam_measurements* set = nullptr;
  REQUIRE(jam_measurements_from_csv(csv, &set) == JAM_OK);
  CHECK(jam_measurements_size(set) == 3);

  jam_measurements* selected = nullptr;
  REQUIRE(jam_measurements_select(set, "radial", &selected) == JAM_OK);
  CHECK(jam_measurements_size(selected) == 3);
  jam_measurements_free(selected);
  CHECK(jam_measurements_select(set, "comb", &selected) ==
        JAM_ERR_INGESTION);
  int32_t joint = 0;
  double tension = 0.0, torque = 0.0;
  CHECK(jam_measurements_record(set, 2, &joint, &tension, &torque) == JAM_OK);
  CHECK(torque == 0.39);

  double slope = 0.0, intercept = 0.0, r2 = 0.0, engagement = 0.0;
  CHECK(jam_measurements_fit(set, 1, &slope, &intercept, &r2, &engagement) ==
        JAM_OK);
  CHECK(slope == doctest::Approx(0.0078).epsilon(1e-12));
  CHECK(r2 == doctest::Approx(1.0));

  jam_mechanism* radial = nullptr;
  REQUIRE(jam_mechanism_preset("radial", &radial) == JAM_OK);
  double mu = 0.0;
  CHECK(jam_calibrate_mu(radial, slope, &mu) == JAM_OK);
  CHECK(mu == doctest::Approx(0.0078 / 0.01665).epsilon(1e-12));
  CHECK(jam_calibrate_mu(radial, 0.0, &mu) == JAM_ERR_CALIBRATION);

  CHECK(jam_calibrate_mu_from_anchor(radial, 4, 50.0, 0.39, &mu) == JAM_OK);
  CHECK(jam_mechanism_set_mu(radial, mu) == JAM_OK);
  jam_chain* chain = nullptr;
  REQUIRE(jam_chain_create(4, 0.0091, 0.122, 50.0, &chain) == JAM_OK);
  jam_profile* profile = nullptr;
  REQUIRE(jam_tip_torque_profile(radial, chain, &profile) == JAM_OK);
  CHECK(jam_profile_entry(profile, 3, &joint, &tension, &torque) == JAM_OK);
  CHECK(torque == doctest::Approx(0.39).epsilon(1e-9));
  jam_profile_free(profile);
  jam_chain_free(chain);
  jam_mechanism_free(radial);
  jam_measurements_free(set);

  CHECK(jam_measurements_from_csv("tension_N,torque_Nm\n-1,0.1\n", &set) ==
        JAM_ERR_INGESTION);
  CHECK(std::string(jam_last_error()).find("line 2") != std::string::npos);

  const double xs[] = {1, 2, 3};
  const double ys[] = {2, 4, 6};
  CHECK(jam_fit_affine(xs, ys, 3, 0, &slope, &intercept, &r2, &engagement) ==
        JAM_OK);
  CHECK(slope == doctest::Approx(2.0));
  const double flat[] = {1, 1, 1};
  CHECK(jam_fit_affine(flat, ys, 3, 0, &slope, &intercept, &r2, &engagement) ==
        JAM_ERR_DEGENERATE_FIT);
}

TEST_CASE("sweep, pareto and recommend") {
  const char* spec = R"({
    "mechanism": "bead",
    "joint_count": 4,
    "root_tension_N": 50.0,
    "ranges": {
      "radius_m": {"min": 0.004, "max": 0.012, "steps": 5},
      "mu": {"min": 0.2, "max": 0.6, "steps": 3}
    }
  })";
  jam_design_table* table = nullptr;
  REQUIRE(jam_sweep_run(spec, &table) == JAM_OK);
  CHECK(jam_design_table_size(table) == 15);

  char* csv = nullptr;
  REQUIRE(jam_design_table_to_csv(table, &csv) == JAM_OK);
  jam_design_table* parsed = nullptr;
  REQUIRE(jam_design_table_from_csv(csv, &parsed) == JAM_OK);
  CHECK(jam_design_table_size(parsed) == 15);

  jam_design_table* front = nullptr;
  REQUIRE(jam_pareto_front(table, "tip_torque_Nm:max,width_m:min", &front) ==
          JAM_OK);
  CHECK(jam_design_table_size(front) >= 1);
  CHECK(jam_design_table_size(front) <= 15);
  jam_design_table* bad = nullptr;
  CHECK(jam_pareto_front(table, "bogus:max", &bad) == JAM_ERR_UNKNOWN_FIELD);

  jam_text_free(csv);
  jam_design_table_free(front);
  jam_design_table_free(parsed);
  jam_design_table_free(table);

  jam_mechanism* mechs[3] = {nullptr, nullptr, nullptr};
  REQUIRE(jam_mechanism_preset("bead", &mechs[0]) == JAM_OK);
  REQUIRE(jam_mechanism_preset("comb", &mechs[1]) == JAM_OK);
  REQUIRE(jam_mechanism_preset("radial", &mechs[2]) == JAM_OK);
  char* report = nullptr;
  REQUIRE(jam_recommend(mechs, 3, R"({
    "min_tip_torque_Nm": 0.05, "max_width_m": 0.02,
    "joint_count": 4, "max_tension_N": 50
  })",
                        &report) == JAM_OK);
  const std::string text = report;
  CHECK(text.find("\"radial\"") != std::string::npos);
  CHECK(text.find("\"ranked\"") != std::string::npos);
  jam_text_free(report);
  for (jam_mechanism* m : mechs) jam_mechanism_free(m);
}

TEST_CASE("null arguments are rejected") {
  CHECK(jam_mechanism_from_json(nullptr, nullptr) == JAM_ERR_INVALID);
  double out = 0.0;
  CHECK(jam_mechanism_torque(nullptr, 1.0, &out) == JAM_ERR_INVALID);
  CHECK(jam_bead_holding_torque(1, 1, 1, nullptr) == JAM_ERR_INVALID);
  CHECK(jam_mechanism_load("/no/such/file.tbl1", nullptr) == JAM_ERR_INVALID);
  jam_mechanism* mech = nullptr;
  CHECK(jam_mechanism_load("/no/such/file.tbl1", &mech) == JAM_ERR_IO);
}
