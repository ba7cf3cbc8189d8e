#include <doctest.h>

#include <cmath>

#include "config.hpp"
#include "error.hpp"

using namespace jamstring;

#ifndef JAMSTRING_PRESET_DIR
#define JAMSTRING_PRESET_DIR "presets"
#endif

namespace {

const char* kRadialJson = R"({
  "mechanism": "radial",
  "units": "mm",
  "outer_radius": 7.5,
  "layer_count": 3,
  "wall_thickness": 0.9,
  "clearance": 1.05,
  "mu": 0.4685
})";

}  // namespace

TEST_CASE("mechanism config parsing") {
  SUBCASE("mm units convert to SI") {
    const Mechanism m = mechanism_from_json(kRadialJson);
    const auto& p = std::get<RadialParams>(m.params);
    CHECK(p.outer_radius_m == doctest::Approx(0.0075).epsilon(1e-15));
    CHECK(p.wall_thickness_m == doctest::Approx(0.0009).epsilon(1e-15));
    CHECK(m.retention_k == 0.97);  // family default
    CHECK(m.inter_axial_m == doctest::Approx(0.0091));
    CHECK(m.engagement_tension_N == 0.0);
  }

  SUBCASE("si units pass through") {
    const Mechanism m = mechanism_from_json(R"({
      "mechanism": "bead", "units": "si",
      "contact_radius": 0.006, "cone_apex_angle_deg": 70, "mu": 0.43
    })");
    const auto& p = std::get<BeadParams>(m.params);
    CHECK(p.contact_radius_m == 0.006);
    CHECK(p.cone_apex_angle_deg == 70.0);
  }

  SUBCASE("attenuation and engagement overrides") {
    const Mechanism m = mechanism_from_json(R"({
      "mechanism": "bead", "units": "si",
      "contact_radius": 0.006, "cone_apex_angle_deg": 70, "mu": 0.43,
      "attenuation": {"k": 0.9}, "engagement_tension_N": 5.0,
      "name": "gated bead"
    })");
    CHECK(m.retention_k == 0.9);
    CHECK(m.engagement_tension_N == 5.0);
    CHECK(m.display_name() == "gated bead");
  }

  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_WITH_AS(mechanism_from_json(R"({
      "mechanism": "bead", "units": "si",
      "contact_radius": 0.006, "cone_apex_angle_deg": 70, "mu": 0.43,
      "color": "red"
    })"),
                         doctest::Contains("unknown key 'color'"), Error);
    // Cross-family fields are unknown too.
    CHECK_THROWS_AS(mechanism_from_json(R"({
      "mechanism": "bead", "units": "si",
      "contact_radius": 0.006, "cone_apex_angle_deg": 70, "mu": 0.43,
      "plate_count": 5
    })"),
                    Error);
  }

  SUBCASE("missing fields and bad values") {
    CHECK_THROWS_AS(mechanism_from_json(R"({
      "mechanism": "bead", "units": "si", "cone_apex_angle_deg": 70,
      "mu": 0.43
    })"),
                    Error);
    CHECK_THROWS_AS(mechanism_from_json(R"({
      "mechanism": "wheel", "units": "si", "mu": 0.4
    })"),
                    Error);
    CHECK_THROWS_AS(mechanism_from_json(R"({
      "mechanism": "bead", "units": "furlongs",
      "contact_radius": 0.006, "cone_apex_angle_deg": 70, "mu": 0.43
    })"),
                    Error);
    CHECK_THROWS_AS(mechanism_from_json("not json"), Error);
  }

  SUBCASE("invariants re-validated after unit conversion") {
    // Innermost layer radius would be non-positive.
    CHECK_THROWS_AS(mechanism_from_json(R"({
      "mechanism": "radial", "units": "mm",
      "outer_radius": 2.0, "layer_count": 3, "wall_thickness": 0.9,
      "clearance": 1.05, "mu": 0.4685
    })"),
                    Error);
  }
}

TEST_CASE("bundled presets match the code presets") {
  struct Case {
    const char* file;
    Mechanism expected;
  };
  const Case cases[] = {
      {JAMSTRING_PRESET_DIR "/bead.tbl1", preset_bead()},
      {JAMSTRING_PRESET_DIR "/comb.tbl1", preset_comb()},
      {JAMSTRING_PRESET_DIR "/radial.tbl1", preset_radial()},
  };
  for (const Case& c : cases) {
    const Mechanism loaded = load_mechanism_file(c.file);
    CHECK(std::string(loaded.family()) == c.expected.family());
    CHECK(loaded.material().mu ==
          doctest::Approx(c.expected.material().mu).epsilon(1e-14));
    CHECK(loaded.retention_k == c.expected.retention_k);
    CHECK(loaded.inter_axial_m ==
          doctest::Approx(c.expected.inter_axial_m).epsilon(1e-14));
    CHECK(loaded.width_m() ==
          doctest::Approx(c.expected.width_m()).epsilon(1e-14));
    CHECK(loaded.torque_slope() ==
          doctest::Approx(c.expected.torque_slope()).epsilon(1e-12));
  }
}

TEST_CASE("preset single-joint torques at 50 N hit the measured anchors") {
  CHECK(load_mechanism_file(JAMSTRING_PRESET_DIR "/bead.tbl1")
            .torque_at_tension(50.0) == doctest::Approx(0.13).epsilon(1e-12));
  CHECK(load_mechanism_file(JAMSTRING_PRESET_DIR "/comb.tbl1")
            .torque_at_tension(50.0) == doctest::Approx(0.20).epsilon(1e-12));
  CHECK(load_mechanism_file(JAMSTRING_PRESET_DIR "/radial.tbl1")
            .torque_at_tension(50.0) == doctest::Approx(0.39).epsilon(1e-12));
}

TEST_CASE("sweep spec parsing") {
  const SweepSpec spec = sweep_spec_from_json(R"({
    "mechanism": "comb",
    "joint_count": 6,
    "root_tension_N": 50.0,
    "grid_cap": 500,
    "fixed": {"mu": 0.3},
    "ranges": {
      "count": {"min": 1, "max": 5, "steps": 5},
      "retention_k": {"min": 0.9, "max": 1.0, "steps": 3}
    }
  })");
  CHECK(spec.family == "comb");
  CHECK(spec.chain.joint_count == 6);
  CHECK(spec.chain.inter_axial_m == doctest::Approx(0.030));
  CHECK(spec.grid_cap == 500);
  CHECK(spec.fixed.at("mu") == 0.3);
  CHECK(spec.ranges.at("count").steps == 5);

  CHECK_THROWS_AS(sweep_spec_from_json(R"({"mechanism": "comb"})"), Error);
  CHECK_THROWS_AS(sweep_spec_from_json(R"({
    "mechanism": "comb", "joint_count": 6, "root_tension_N": 50,
    "ranges": {}, "surprise": 1
  })"),
                  Error);
}

TEST_CASE("requirement parsing and report serialization") {
  const Requirement req = requirement_from_json(R"({
    "min_tip_torque_Nm": 0.1, "max_width_m": 0.02,
    "joint_count": 4, "max_tension_N": 50
  })");
  CHECK(req.min_tip_torque_Nm == 0.1);
  CHECK(req.joint_count == 4);

  CHECK_THROWS_AS(requirement_from_json(R"({
    "min_tip_torque_Nm": -0.1, "max_width_m": 0.02,
    "joint_count": 4, "max_tension_N": 50
  })"),
                  Error);

  const std::vector<Mechanism> presets = {preset_bead(), preset_comb(),
                                          preset_radial()};
  const std::string report =
      recommendation_to_json(recommend(req, presets));
  CHECK(report.find("\"ranked\"") != std::string::npos);
  CHECK(report.find("\"radial\"") != std::string::npos);
  CHECK(report.find("\"profile\"") != std::string::npos);
}
