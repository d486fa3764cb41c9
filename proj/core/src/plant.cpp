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

#include <cmath>

namespace asmkit::control {

namespace {

// Velocity update on one axis: explicit force, implicit viscous drag, then
// a Coulomb impulse that cannot cross zero (stiction).
double step_axis_velocity(double v, double force, double inertia, double viscous,
                          double coulomb, double dt) {
  double vnext = v + (force / inertia) * dt;
  if (viscous > 0.0) {
    vnext /= 1.0 + (viscous / inertia) * dt;
  }
  if (coulomb > 0.0) {
    const double dv = (coulomb / inertia) * dt;
    if (std::abs(vnext) <= dv) {
      vnext = 0.0;
    } else {
      vnext -= (vnext > 0.0 ? dv : -dv);
    }
  }
  return vnext;
}

}  // namespace

Vector6d tsi_force(const Pose6D& setpoint, const PlantState& plant,
                   const Vector6d& kp, const Vector6d& kd) {
  const Eigen::Vector3d e_pos = setpoint.position - plant.pose.position;
  const Eigen::Quaterniond q_err =
      normalize_if_needed(setpoint.orientation * plant.pose.orientation.conjugate());
  const Eigen::Vector3d e_rot = rotation_vector(q_err);

  Vector6d wrench;
  wrench.head<3>() =
      kp.head<3>().cwiseProduct(e_pos) - kd.head<3>().cwiseProduct(plant.lin_vel);
  wrench.tail<3>() =
      kp.tail<3>().cwiseProduct(e_rot) - kd.tail<3>().cwiseProduct(plant.ang_vel);
  return wrench;
}

Vector6d tracking_wrench(ControllerState& ctrl, const Pose6D& setpoint,
                         const PlantState& plant, double dt) {
  Vector6d wrench = tsi_force(setpoint, plant, ctrl.kp, ctrl.kd);
  if (ctrl.scheme == Scheme::Pid) {
    const Eigen::Vector3d e_pos = setpoint.position - plant.pose.position;
    const Eigen::Vector3d e_rot = rotation_vector(normalize_if_needed(
        setpoint.orientation * plant.pose.orientation.conjugate()));
    Vector6d err;
    err.head<3>() = e_pos;
    err.tail<3>() = e_rot;
    ctrl.integral += err * dt;
    ctrl.integral = ctrl.integral.cwiseMax(-ctrl.integral_clamp)
                        .cwiseMin(ctrl.integral_clamp);
    wrench += ctrl.ki.cwiseProduct(ctrl.integral);
  }
  return wrench;
}

void step_plant(PlantState& plant, const Vector6d& wrench, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("dt must be > 0");
  const Disturbances& d = plant.disturbances;

  for (int i = 0; i < 3; ++i) {
    const double force = wrench[i] + plant.mass * d.gravity_bias[i];
    plant.lin_vel[i] = step_axis_velocity(plant.lin_vel[i], force, plant.mass,
                                          d.viscous_linear, d.coulomb_force, dt);
    plant.pose.position[i] += plant.lin_vel[i] * dt;
  }
  for (int i = 0; i < 3; ++i) {
    plant.ang_vel[i] =
        step_axis_velocity(plant.ang_vel[i], wrench[3 + i], plant.inertia,
                           d.viscous_angular, d.coulomb_torque, dt);
  }
  const Eigen::Vector3d dtheta = plant.ang_vel * dt;
  if (dtheta.squaredNorm() > 0.0) {
    plant.pose.orientation = normalize_if_needed(
        quaternion_from_rotation_vector(dtheta) * plant.pose.orientation);
  }

  if (plant.pose.position.norm() > 10.0) {
    throw PlantDivergence("plant diverged: position norm exceeds 10 m");
  }
}

}  // namespace asmkit::control
