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

#ifndef ASMKIT_CONTROL_PLANT_HPP_
#define ASMKIT_CONTROL_PLANT_HPP_

#include <stdexcept>

#include "asmkit/control/controller.hpp"
#include "asmkit/pose.hpp"

namespace asmkit::control {

/// Constant and velocity-dependent disturbances acting on the plant.
struct Disturbances {
  Eigen::Vector3d gravity_bias = Eigen::Vector3d::Zero();  // m/s^2
  double coulomb_force = 0.0;    // N, per translation axis, opposes motion
  double coulomb_torque = 0.0;   // N*m, per rotation axis
  double viscous_linear = 0.0;   // N*s/m
  double viscous_angular = 0.0;  // N*m*s/rad
};

/// Task-space point-mass / rotor proxy for an impedance-controlled arm.
/// Translation axes carry a point mass; rotation axes an isotropic rotor.
struct PlantState {
  Pose6D pose;
  Eigen::Vector3d lin_vel = Eigen::Vector3d::Zero();
  Eigen::Vector3d ang_vel = Eigen::Vector3d::Zero();
  double mass = 1.0;      // kg
  double inertia = 0.05;  // kg*m^2
  Disturbances disturbances;
};

class PlantDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Task-space impedance wrench: kp (*) (setpoint (-) state) - kd (*)
/// velocity, componentwise over the six task axes. Rotation error is the
/// world-frame rotation vector of the orientation mismatch.
Vector6d tsi_force(const Pose6D& setpoint, const PlantState& plant,
                   const Vector6d& kp, const Vector6d& kd);

/// Tracking wrench for a control scheme: the TSI law, plus the clamped
/// integral term when ctrl.scheme == Pid (the integral accumulates the
/// setpoint error at the physics rate and is clamped per axis).
Vector6d tracking_wrench(ControllerState& ctrl, const Pose6D& setpoint,
                         const PlantState& plant, double dt);

/// Semi-implicit Euler step under the applied wrench, gravity-bias force,
/// viscous damping, and Coulomb friction with a stiction-correct impulse
/// clamp. Throws PlantDivergence when the position norm exceeds 10 m.
void step_plant(PlantState& plant, const Vector6d& wrench, double dt);

}  // namespace asmkit::control

#endif  // ASMKIT_CONTROL_PLANT_HPP_
