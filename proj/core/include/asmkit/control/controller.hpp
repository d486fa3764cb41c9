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

#ifndef ASMKIT_CONTROL_CONTROLLER_HPP_
#define ASMKIT_CONTROL_CONTROLLER_HPP_

#include <Eigen/Core>

#include "asmkit/pose.hpp"

namespace asmkit::control {

using Vector6d = Eigen::Matrix<double, 6, 1>;

/// How incremental policy actions become tracking setpoints.
enum class Scheme {
  Nominal,    // setpoint = current (+) action, recomputed every step
  Pid,        // nominal setpoint; tracking loop adds a clamped integral term
  Plai,       // setpoint = desired (+) action: actions integrate
  LeakyPlai,  // plai, with the desired-to-current offset clamped per axis
};

/// Per-axis translation clamps plus a rotation-angle clamp for LeakyPlai.
struct LeakLimits {
  Eigen::Vector3d translation{0.05, 0.05, 0.03};  // meters
  double rotation_angle = 0.05;                   // radians
};

struct ControllerState {
  Scheme scheme = Scheme::Nominal;
  Pose6D desired;            // integrated target (plai / leaky_plai)
  bool initialized = false;  // first apply_action seeds desired = current

  // Task-space gains, translation axes then rotation axes.
  Vector6d kp = default_kp();
  Vector6d kd = default_kd();
  Vector6d ki = Vector6d::Zero();  // pid only
  Vector6d integral = Vector6d::Zero();
  Vector6d integral_clamp = default_integral_clamp();

  LeakLimits leak;

  static Vector6d default_kp();              // [1000^3, 50^3]
  static Vector6d default_kd();              // near-critical for unit mass
  static Vector6d default_integral_clamp();  // anti-windup bound

  void reset();
};

/// Applies one incremental action under the configured scheme and returns
/// the tracking setpoint. Nominal/PID recompute from the measured state;
/// PLAI accumulates onto the previous desired state; LeakyPlai additionally
/// clamps the desired-to-current offset so that after every update the
/// per-axis translation gap never exceeds leak.translation and the rotation
/// gap never exceeds leak.rotation_angle.
Pose6D apply_action(ControllerState& ctrl, const Pose6D& current,
                    const PoseDelta& action);

}  // namespace asmkit::control

#endif  // ASMKIT_CONTROL_CONTROLLER_HPP_
