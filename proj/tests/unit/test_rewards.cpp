// Copyright 2026 The asmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "asmkit/rewards/rewards.hpp"

#include <doctest.h>

#include "asmkit/geometry/primitives.hpp"
#include "asmkit/rng.hpp"
#include "support/oracles.hpp"

using namespace asmkit;
using rewards::KeypointSet;

namespace {
const geom::TriangleMesh& unit_cube() {
  static const geom::TriangleMesh m = geom::make_box({1, 1, 1});
  return m;
}

Pose6D yawed(double angle) {
  return Pose6D(Eigen::Vector3d::Zero(),
                quaternion_from_rotation_vector({0, 0, angle}));
}
}  // namespace

TEST_CASE("keypoint layouts have the documented structure") {
  const auto c4 = KeypointSet::collinear4(unit_cube().bbox);
  REQUIRE(c4.offsets.size() == 4);
  c4.validate();
  for (const auto& k : c4.offsets) {
    CHECK(k.x() == 0.0);
    CHECK(k.y() == 0.0);
  }
  CHECK(c4.offsets.front().z() == doctest::Approx(-0.5));
  CHECK(c4.offsets.back().z() == doctest::Approx(0.5));

  const auto s13 = KeypointSet::sixdof13(unit_cube().bbox);
  REQUIRE(s13.offsets.size() == 13);
  s13.validate();
}

TEST_CASE("keypoint reward is zero at the goal") {
  const auto kp = KeypointSet::collinear4(unit_cube().bbox);
  const Pose6D pose({0.3, -0.2, 0.4},
                    quaternion_from_rotation_vector({0.1, 0.2, 0.3}));
  CHECK(rewards::keypoint_reward(kp, pose, pose) == 0.0);
}

TEST_CASE("pure translation by 1 cm scores -1e-4") {
  const auto kp = KeypointSet::collinear4(unit_cube().bbox);
  const Pose6D goal = Pose6D::identity();
  const Pose6D current({0.01, 0.0, 0.0}, Eigen::Quaterniond::Identity());
  CHECK(rewards::keypoint_reward(kp, current, goal) ==
        doctest::Approx(-1e-4).epsilon(1e-12));
}

TEST_CASE("collinear keypoints alias yaw, sixdof keypoints do not") {
  const auto c4 = KeypointSet::collinear4(unit_cube().bbox);
  const auto s13 = KeypointSet::sixdof13(unit_cube().bbox);
  const Pose6D goal = Pose6D::identity();
  const Pose6D quarter_turn = yawed(M_PI_2);

  CHECK(rewards::keypoint_reward(c4, quarter_turn, goal) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rewards::keypoint_reward(s13, quarter_turn, goal) < -1e-3);

  // Strictly negative across the open yaw interval.
  for (double a : {0.3, 1.0, 2.0, 3.0}) {
    CHECK(rewards::keypoint_reward(s13, yawed(a), goal) < 0.0);
    CHECK(rewards::keypoint_reward(c4, yawed(a), goal) ==
          doctest::Approx(0.0).epsilon(1e-15));
  }
}

TEST_CASE("keypoint reward is invariant under a joint rigid transform") {
  const auto kp = KeypointSet::sixdof13(unit_cube().bbox);
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
    q.normalize();
    const Pose6D world({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}, q);
    const Pose6D a({0.02, -0.01, 0.005},
                   quaternion_from_rotation_vector({0.05, 0, 0.1}));
    const Pose6D b = Pose6D::identity();
    const double base = rewards::keypoint_reward(kp, a, b);
    const double moved = rewards::keypoint_reward(kp, world * a, world * b);
    CHECK(moved == doctest::Approx(base).epsilon(1e-9));
  }
}

TEST_CASE("chamfer reward basics") {
  const std::vector<Eigen::Vector3d> a = {{0, 0, 0}};
  const std::vector<Eigen::Vector3d> b = {{1, 0, 0}};
  CHECK(rewards::chamfer_reward(a, a) == 0.0);
  CHECK(rewards::chamfer_reward(a, b) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK_THROWS_AS(rewards::chamfer_reward({}, b), std::invalid_argument);
}

TEST_CASE("chamfer reward matches the quadratic brute force") {
  Rng rng(17);
  std::vector<Eigen::Vector3d> a, b;
  for (int i = 0; i < 100; ++i) {
    a.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    b.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const double fast = rewards::chamfer_reward(a, b);
  const double slow = -oracles::brute_force_chamfer(a, b);
  CHECK(fast == doctest::Approx(slow).epsilon(1e-12));
}

TEST_CASE("sdf reward formula on a constant field") {
  geom::SdfGrid g;
  g.origin = {-1, -1, -1};
  g.voxel_size = 1.0;
  g.dims = {3, 3, 3};
  g.values.assign(27, 0.01f);
  geom::PointSample pts;
  pts.points = {{0, 0, 0}, {0.1, 0, 0}, {0, 0.1, 0}};
  const double r = rewards::sdf_reward(pts, Pose6D::identity(), g,
                                       Pose6D::identity(), 1e-4);
  // Stored as f32, so the mean is 0.01 up to single-precision rounding.
  CHECK(r == doctest::Approx(-std::log(static_cast<double>(0.01f))).epsilon(1e-12));
  CHECK(r == doctest::Approx(4.60517).epsilon(1e-4));
}

TEST_CASE("sdf reward at perfect alignment hits the floor value") {
  const geom::TriangleMesh cube = geom::make_box({0.4, 0.4, 0.4});
  const geom::SdfGrid grid = geom::bake_sdf(cube, 0.002);
  const auto pts = geom::sample_points(cube, 1000, geom::SampleMode::Surface, 21);
  const Pose6D target({0.1, 0.0, -0.05}, Eigen::Quaterniond::Identity());
  const double r = rewards::sdf_reward(pts, target, grid, target, 1e-4);
  CHECK(r == doctest::Approx(-std::log(1e-4)).epsilon(1e-9));
  CHECK(r == doctest::Approx(9.2103).epsilon(1e-4));
}

TEST_CASE("sdf reward monotonicity: 1 mm beats 10 mm") {
  const geom::TriangleMesh cube = geom::make_box({0.4, 0.4, 0.4});
  const geom::SdfGrid grid = geom::bake_sdf(cube, 0.005);
  const auto pts = geom::sample_points(cube, 1000, geom::SampleMode::Surface, 22);
  const Pose6D target = Pose6D::identity();
  const Pose6D near({0.001, 0, 0}, Eigen::Quaterniond::Identity());
  const Pose6D far({0.010, 0, 0}, Eigen::Quaterniond::Identity());
  const double r_near = rewards::sdf_reward(pts, near, grid, target);
  const double r_far = rewards::sdf_reward(pts, far, grid, target);
  CHECK(r_near > r_far);
  // Bounded above by -log(floor).
  CHECK(r_near <= -std::log(1e-4) + 1e-12);
}

TEST_CASE("bonus scale hits the documented anchors") {
  CHECK(rewards::bonus_scale(0.0) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(rewards::bonus_scale(0.1) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(rewards::bonus_scale(0.9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(rewards::bonus_scale(-0.001), std::invalid_argument);
}

TEST_CASE("compose_return on a simple trace") {
  rewards::RewardSpec spec;
  spec.dense.push_back({"dist", 1.0});
  spec.bonuses.push_back({"success", 10.0});
  std::vector<std::vector<double>> records(10, {0.1});
  CHECK(rewards::compose_return(spec, records, {true}) ==
        doctest::Approx(11.0).epsilon(1e-12));
  CHECK(rewards::compose_return(spec, records, {false}) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a zero horizon factor annihilates the return") {
  rewards::RewardSpec spec;
  spec.dense.push_back({"dist", 3.0});
  spec.bonuses.push_back({"success", 10.0});
  spec.horizon_scales.push_back({"difficulty", 0.0});
  std::vector<std::vector<double>> records(5, {2.0});
  CHECK(rewards::compose_return(spec, records, {true}) == 0.0);
}

TEST_CASE("compose_return with the deployment default weights") {
  // Dense sdf term at weight 10, success bonus 10; synthetic 4-step trace
  // hand-evaluated: 10*(4.0+4.2+5.0+9.0) + 10 = 232.
  rewards::RewardSpec spec;
  spec.dense.push_back({"sdf", 10.0});
  spec.bonuses.push_back({"success", 10.0});
  const std::vector<std::vector<double>> records = {{4.0}, {4.2}, {5.0}, {9.0}};
  CHECK(rewards::compose_return(spec, records, {true}) ==
        doctest::Approx(232.0).epsilon(1e-12));
}

TEST_CASE("compose_return is linear in weights and factors") {
  Rng rng(23);
  rewards::RewardSpec spec;
  spec.dense.push_back({"a", rng.uniform(0.1, 2.0)});
  spec.dense.push_back({"b", rng.uniform(0.1, 2.0)});
  spec.bonuses.push_back({"s", rng.uniform(1.0, 10.0)});
  spec.horizon_scales.push_back({"h", 0.5});

  std::vector<std::vector<double>> records;
  for (int t = 0; t < 7; ++t) {
    records.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1)});
  }
  const double g1 = rewards::compose_return(spec, records, {true});

  rewards::RewardSpec doubled = spec;
  doubled.horizon_scales[0].factor = 1.0;
  const double g2 = rewards::compose_return(doubled, records, {true});
  CHECK(g2 == doctest::Approx(2.0 * g1).epsilon(1e-12));
}

TEST_CASE("compose_return validates record shape") {
  rewards::RewardSpec spec;
  spec.dense.push_back({"a", 1.0});
  CHECK_THROWS_AS(
      rewards::compose_return(spec, {{0.1, 0.2}}, {}),
      std::invalid_argument);
  rewards::RewardSpec bad = spec;
  bad.horizon_scales.push_back({"h", 1.5});
  CHECK_THROWS_AS(rewards::compose_return(bad, {{0.1}}, {}),
                  std::invalid_argument);
}
