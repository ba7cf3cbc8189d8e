#include <doctest.h>

#include <cmath>
#include <random>

#include "error.hpp"
#include "experiments.hpp"
#include "oracles.hpp"
#include "tension.hpp"

using namespace jamstring;

namespace {

ChainConfig chain_of(int joints, double tension) {
  ChainConfig chain;
  chain.joint_count = joints;
  chain.inter_axial_m = 0.0091;
  chain.root_tension_N = tension;
  return chain;
}

// A synthetic bead mechanism with a chosen first-joint torque slope.
Mechanism slope_mech(double slope, double k) {
  BeadParams p;
  p.contact_radius_m = 1.0;
  p.material.mu = slope;
  Mechanism m = make_bead(p);
  m.retention_k = k;
  return m;
}

}  // namespace

TEST_CASE("joint tension decay") {
  CHECK(joint_tension(50.0, {1.0}, 1) == 50.0);
  CHECK(joint_tension(50.0, {1.0}, 37) == 50.0);
  CHECK(joint_tension(50.0, {0.94}, 2) == doctest::Approx(47.0).epsilon(1e-12));
  CHECK(joint_tension(100.0, {0.94}, 11) ==
        doctest::Approx(100.0 * std::pow(0.94, 10)).epsilon(1e-12));
  CHECK(joint_tension(100.0, {0.94}, 11) ==
        doctest::Approx(53.86).epsilon(1e-4));

  CHECK_THROWS_AS(joint_tension(50.0, {0.94}, 0), Error);
  CHECK_THROWS_AS(joint_tension(50.0, {0.0}, 1), Error);
  CHECK_THROWS_AS(joint_tension(50.0, {1.1}, 1), Error);
  CHECK_THROWS_AS(joint_tension(-1.0, {0.94}, 1), Error);
}

TEST_CASE("joint tension composes") {
  for (const double k : {0.9, 0.94, 0.99}) {
    for (const int i : {1, 2, 5, 17}) {
      for (const int j : {1, 3, 8}) {
        const double direct = joint_tension(50.0, {k}, i + j - 1);
        const double chained =
            joint_tension(joint_tension(50.0, {k}, i), {k}, j);
        CHECK(direct == doctest::Approx(chained).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("tip torque profile") {
  Mechanism bead = preset_bead();

  SUBCASE("lossless chain is flat, machine exact") {
    bead.retention_k = 1.0;
    const TorqueProfile profile = tip_torque_profile(bead, chain_of(6, 50.0));
    REQUIRE(profile.entries.size() == 6);
    for (const ProfileEntry& e : profile.entries) {
      CHECK(e.torque_Nm == profile.entries.front().torque_Nm);
      CHECK(e.tension_N == 50.0);
    }
  }

  SUBCASE("decaying chain is strictly decreasing") {
    const TorqueProfile profile = tip_torque_profile(bead, chain_of(8, 50.0));
    for (std::size_t i = 1; i < profile.entries.size(); ++i) {
      CHECK(profile.entries[i].torque_Nm <
            profile.entries[i - 1].torque_Nm);
      CHECK(profile.entries[i].joint_index == static_cast<int>(i) + 1);
    }
    profile.validate();
  }

  SUBCASE("comb decays by 6% per joint") {
    const Mechanism comb = preset_comb();
    const TorqueProfile profile = tip_torque_profile(comb, chain_of(4, 50.0));
    const double ratio =
        profile.entries[3].torque_Nm / profile.entries[0].torque_Nm;
    CHECK(ratio == doctest::Approx(0.94 * 0.94 * 0.94).epsilon(1e-12));
  }

  SUBCASE("anchor calibration pins the fourth joint") {
    Mechanism comb = preset_comb();
    comb.set_mu(calibrate_mu_from_anchor(comb, 4, 50.0, 0.20));
    const TorqueProfile profile = tip_torque_profile(comb, chain_of(4, 50.0));
    CHECK(profile.entries[3].torque_Nm ==
          doctest::Approx(0.20).epsilon(1e-9));
    CHECK(profile.entries[0].torque_Nm ==
          doctest::Approx(0.20 / (0.94 * 0.94 * 0.94)).epsilon(1e-9));
  }
}

TEST_CASE("default retention factors separate comb from bead and radial") {
  const ChainConfig chain = chain_of(4, 50.0);
  auto joint4_over_joint1 = [&](const Mechanism& m) {
    const TorqueProfile p = tip_torque_profile(m, chain);
    return p.entries[3].torque_Nm / p.entries[0].torque_Nm;
  };
  CHECK(joint4_over_joint1(preset_comb()) < 0.85);
  CHECK(joint4_over_joint1(preset_bead()) > 0.85);
  CHECK(joint4_over_joint1(preset_radial()) > 0.85);
}

TEST_CASE("halving joint") {
  CHECK(halving_joint({0.5}) == 1);
  CHECK(halving_joint({0.94}) == 12);
  CHECK(halving_joint({0.99}) == 69);
  for (const double k : {0.5, 0.7, 0.94, 0.97, 0.985, 0.99, 0.999}) {
    CHECK(halving_joint({k}) == oracles::halving_joint_naive(k));
  }
  CHECK_THROWS_AS(halving_joint({1.0}), Error);
  CHECK_THROWS_WITH_AS(halving_joint({1.0}),
                       doctest::Contains("never halves"), Error);
}

TEST_CASE("crossover joint") {
  SUBCASE("identical mechanisms tie at joint 1") {
    const Mechanism a = preset_radial();
    CHECK(crossover_joint(a, a, chain_of(10, 50.0)) == 1);
  }

  SUBCASE("flat radial against a decaying comb that starts higher") {
    // a holds 0.39 N*m at every joint; b starts at 0.50 N*m and keeps 94%
    // per joint. 0.50 * 0.94^4 = 0.390375 still beats a, so the first
    // crossover is joint 6.
    const Mechanism a = slope_mech(0.39 / 50.0, 1.0);
    const Mechanism b = slope_mech(0.50 / 50.0, 0.94);
    const auto joint = crossover_joint(a, b, chain_of(12, 50.0));
    REQUIRE(joint.has_value());
    CHECK(*joint == 6);

    std::vector<double> series_a, series_b;
    for (int j = 1; j <= 12; ++j) {
      series_a.push_back(0.39);
      series_b.push_back(0.50 * std::pow(0.94, j - 1));
    }
    CHECK(*joint == oracles::crossover_scan(series_a, series_b));
  }

  SUBCASE("calibrated radial beats the comb everywhere") {
    const Mechanism radial = preset_radial();
    const Mechanism comb = preset_comb();
    CHECK(crossover_joint(radial, comb, chain_of(10, 50.0)) == 1);
  }

  SUBCASE("no crossover within the chain") {
    const Mechanism a = slope_mech(0.001, 1.0);
    const Mechanism b = slope_mech(0.5, 0.99);
    CHECK(!crossover_joint(a, b, chain_of(20, 50.0)).has_value());
  }

  SUBCASE("agrees with a brute-force scan") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> slope_dist(0.001, 0.02);
    std::uniform_real_distribution<double> k_dist(0.9, 1.0);
    std::uniform_int_distribution<int> joints_dist(1, 100);
    for (int trial = 0; trial < 50; ++trial) {
      const double sa = slope_dist(rng);
      const double sb = slope_dist(rng);
      const double ka = k_dist(rng);
      const double kb = k_dist(rng);
      const int joints = joints_dist(rng);
      const Mechanism a = slope_mech(sa, ka);
      const Mechanism b = slope_mech(sb, kb);
      std::vector<double> series_a, series_b;
      for (int j = 1; j <= joints; ++j) {
        series_a.push_back(sa * 50.0 * std::pow(ka, j - 1));
        series_b.push_back(sb * 50.0 * std::pow(kb, j - 1));
      }
      const auto joint = crossover_joint(a, b, chain_of(joints, 50.0));
      CHECK(joint.value_or(0) ==
            oracles::crossover_scan(series_a, series_b));
    }
  }
}

TEST_CASE("profile CSV serialization") {
  const Mechanism bead = preset_bead();
  const std::string csv = profile_to_csv(tip_torque_profile(bead,
                                                            chain_of(2, 50.0)));
  CHECK(csv.substr(0, csv.find('\n')) == "joint_index,tension_N,torque_Nm");
  CHECK(csv.find("1,50,0.13") != std::string::npos);
}

TEST_CASE("chain config validation") {
  CHECK_THROWS_AS(tip_torque_profile(preset_bead(), chain_of(0, 50.0)), Error);
  CHECK_THROWS_AS(tip_torque_profile(preset_bead(), chain_of(4, -1.0)), Error);
  ChainConfig bad = chain_of(4, 50.0);
  bad.inter_axial_m = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}
