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

#include "asmkit/pose.hpp"

#include <doctest.h>

#include "asmkit/rng.hpp"

using namespace asmkit;

namespace {

Pose6D random_pose(Rng& rng) {
  Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  return Pose6D({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}, q);
}

PoseDelta random_delta(Rng& rng) {
  Eigen::Quaterniond q(rng.normal(), rng.normal(), rng.normal(), rng.normal());
  q.normalize();
  return PoseDelta({rng.uniform(-0.1, 0.1), rng.uniform(-0.1, 0.1),
                    rng.uniform(-0.1, 0.1)},
                   q);
}

}  // namespace

TEST_CASE("compose with identity is bit-preserving") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const Pose6D p = random_pose(rng);
    const Pose6D q = pose_compose(p, PoseDelta::identity());
    CHECK(q.position == p.position);
    CHECK(q.orientation.coeffs() == p.orientation.coeffs());
  }
}

TEST_CASE("quaternion renormalized on construction") {
  Eigen::Quaterniond skewed(2.0, 0.0, 0.0, 0.0);
  const Pose6D p(Eigen::Vector3d::Zero(), skewed);
  CHECK(std::abs(p.orientation.norm() - 1.0) < 1e-9);
}

TEST_CASE("yaw and inverse yaw cancel") {
  const Pose6D p(Eigen::Vector3d(0.1, 0.2, 0.3),
                 Eigen::Quaterniond::Identity());
  const PoseDelta yaw({0, 0, 0}, quaternion_from_rotation_vector({0, 0, M_PI_2}));
  const PoseDelta unyaw({0, 0, 0},
                        quaternion_from_rotation_vector({0, 0, -M_PI_2}));
  const Pose6D q = pose_compose(pose_compose(p, yaw), unyaw);
  CHECK(quaternion_angle(q.orientation, p.orientation) < 1e-12);
}

TEST_CASE("difference is the inverse of compose") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const Pose6D b = random_pose(rng);
    const PoseDelta d = random_delta(rng);
    const Pose6D a = pose_compose(b, d);

    const PoseDelta rec = pose_difference(a, b);
    CHECK((rec.translation - d.translation).norm() < 1e-12);
    CHECK(quaternion_angle(rec.rotation, d.rotation) < 1e-12);

    // And the round trip through arbitrary pose pairs.
    const Pose6D b2 = random_pose(rng);
    const Pose6D back = pose_compose(b2, pose_difference(a, b2));
    CHECK((back.position - a.position).norm() < 1e-12);
    CHECK(quaternion_angle(back.orientation, a.orientation) < 1e-12);
  }
}

TEST_CASE("difference of a pose with itself is the identity delta") {
  Rng rng(13);
  const Pose6D p = random_pose(rng);
  const PoseDelta d = pose_difference(p, p);
  CHECK(d.translation.norm() == 0.0);
  CHECK(quaternion_angle(d.rotation, Eigen::Quaterniond::Identity()) < 1e-15);
}

TEST_CASE("successive deltas associate") {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const Pose6D p = random_pose(rng);
    const PoseDelta d1 = random_delta(rng);
    const PoseDelta d2 = random_delta(rng);

    const Pose6D left = pose_compose(pose_compose(p, d1), d2);
    PoseDelta both;
    both.translation = d1.translation + d2.translation;
    both.rotation = normalize_if_needed(d1.rotation * d2.rotation);
    const Pose6D right = pose_compose(p, both);

    CHECK((left.position - right.position).norm() < 1e-12);
    CHECK(quaternion_angle(left.orientation, right.orientation) < 1e-12);
  }
}

TEST_CASE("SE(3) product against point transforms") {
  Rng rng(15);
  for (int i = 0; i < 200; ++i) {
    const Pose6D a = random_pose(rng);
    const Pose6D b = random_pose(rng);
    const Eigen::Vector3d x(rng.uniform(-1, 1), rng.uniform(-1, 1),
                            rng.uniform(-1, 1));
    const Eigen::Vector3d via_product = (a * b).transform_point(x);
    const Eigen::Vector3d via_chain = a.transform_point(b.transform_point(x));
    CHECK((via_product - via_chain).norm() < 1e-12);

    const Eigen::Vector3d back = a.inverse().transform_point(a.transform_point(x));
    CHECK((back - x).norm() < 1e-12);
  }
}

TEST_CASE("rotation vector round trip") {
  Rng rng(16);
  for (int i = 0; i < 500; ++i) {
    Eigen::Vector3d rv(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3));
    if (rv.norm() > M_PI) rv *= (M_PI - 1e-6) / rv.norm();
    const Eigen::Quaterniond q = quaternion_from_rotation_vector(rv);
    CHECK((rotation_vector(q) - rv).norm() < 1e-10);
  }
}
