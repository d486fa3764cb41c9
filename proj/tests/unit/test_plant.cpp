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

#include "asmkit/control/plant.hpp"

#include <doctest.h>

using namespace asmkit;
using control::PlantState;
using control::Vector6d;

TEST_CASE("tsi wrench vanishes at the setpoint with zero velocity") {
  PlantState plant;
  const Vector6d w = control::tsi_force(plant.pose, plant,
                                        control::ControllerState::default_kp(),
                                        control::ControllerState::default_kd());
  CHECK(w.norm() == 0.0);
}

TEST_CASE("1 mm error with kp 1000 gives 1 N") {
  PlantState plant;
  Pose6D sp = plant.pose;
  sp.position.x() += 0.001;
  const Vector6d w = control::tsi_force(sp, plant,
                                        control::ControllerState::default_kp(),
                                        control::ControllerState::default_kd());
  CHECK(w[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w.tail<5>().norm() == 0.0);
}

TEST_CASE("zero wrench and zero state stay at rest") {
  PlantState plant;
  const PlantState before = plant;
  control::step_plant(plant, Vector6d::Zero(), 1.0 / 120.0);
  CHECK(plant.pose.position == before.pose.position);
  CHECK(plant.lin_vel == before.lin_vel);
}

TEST_CASE("one semi-implicit step under constant force") {
  PlantState plant;
  plant.mass = 2.0;
  Vector6d w = Vector6d::Zero();
  w[0] = 1.0;
  const double dt = 1.0 / 120.0;
  control::step_plant(plant, w, dt);
  const double v = 1.0 / 2.0 * dt;  // F/m * dt
  CHECK(plant.lin_vel.x() == doctest::Approx(v).epsilon(1e-15));
  CHECK(plant.pose.position.x() == doctest::Approx(v * dt).epsilon(1e-15));
}

TEST_CASE("stiction holds below the friction threshold") {
  PlantState plant;
  plant.disturbances.coulomb_force = 0.15;
  Vector6d w = Vector6d::Zero();
  w[0] = 0.10;  // below the 0.15 N threshold
  for (int i = 0; i < 100; ++i) control::step_plant(plant, w, 1.0 / 120.0);
  CHECK(plant.lin_vel.x() == 0.0);
  CHECK(plant.pose.position.x() == 0.0);

  w[0] = 0.30;  // above threshold: moves
  control::step_plant(plant, w, 1.0 / 120.0);
  CHECK(plant.lin_vel.x() > 0.0);
}

TEST_CASE("gravity bias accelerates the mass") {
  PlantState plant;
  plant.disturbances.gravity_bias = {0.0, 0.0, -0.12};
  control::step_plant(plant, Vector6d::Zero(), 1.0 / 120.0);
  CHECK(plant.lin_vel.z() == doctest::Approx(-0.12 / 120.0).epsilon(1e-12));
}

TEST_CASE("undriven damped motion dissipates energy") {
  PlantState plant;
  plant.lin_vel = {0.5, -0.2, 0.1};
  plant.ang_vel = {1.0, 0.0, -0.5};
  plant.disturbances.viscous_linear = 2.0;
  plant.disturbances.viscous_angular = 0.05;
  plant.disturbances.coulomb_force = 0.01;
  double prev = 0.5 * plant.mass * plant.lin_vel.squaredNorm() +
                0.5 * plant.inertia * plant.ang_vel.squaredNorm();
  for (int i = 0; i < 200; ++i) {
    control::step_plant(plant, Vector6d::Zero(), 1.0 / 120.0);
    const double e = 0.5 * plant.mass * plant.lin_vel.squaredNorm() +
                     0.5 * plant.inertia * plant.ang_vel.squaredNorm();
    CHECK(e <= prev + 1e-15);
    prev = e;
  }
}

TEST_CASE("rotation integrates angular velocity") {
  PlantState plant;
  plant.ang_vel = {0.0, 0.0, M_PI};  // half-turn per second
  for (int i = 0; i < 120; ++i) {
    control::step_plant(plant, Vector6d::Zero(), 1.0 / 120.0);
  }
  const Eigen::Vector3d rv = rotation_vector(plant.pose.orientation);
  CHECK(rv.z() == doctest::Approx(M_PI).epsilon(1e-9));
}

TEST_CASE("divergence raises an explicit error") {
  PlantState plant;
  plant.lin_vel = {2000.0, 0.0, 0.0};
  CHECK_THROWS_AS(
      [&] {
        for (int i = 0; i < 10000; ++i) {
          control::step_plant(plant, Vector6d::Zero(), 1.0 / 120.0);
        }
      }(),
      control::PlantDivergence);
}

TEST_CASE("pid tracking wrench clamps its integral") {
  control::ControllerState ctrl;
  ctrl.scheme = control::Scheme::Pid;
  ctrl.ki = Vector6d::Constant(10.0);
  ctrl.integral_clamp = Vector6d::Constant(0.01);
  PlantState plant;
  Pose6D sp = plant.pose;
  sp.position.x() += 1.0;  // huge persistent error
  for (int i = 0; i < 5000; ++i) {
    control::tracking_wrench(ctrl, sp, plant, 1.0 / 120.0);
    CHECK(std::abs(ctrl.integral[0]) <= 0.01 + 1e-15);
  }
  CHECK(ctrl.integral[0] == doctest::Approx(0.01));
}
