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

#include "asmkit/control/controller.hpp"

#include <cmath>

namespace asmkit::control {

Vector6d ControllerState::default_kp() {
  Vector6d v;
  v << 1000.0, 1000.0, 1000.0, 50.0, 50.0, 50.0;
  return v;
}

Vector6d ControllerState::default_kd() {
  // ~2*sqrt(kp*m) per axis for unit mass / 0.05 rotor inertia.
  Vector6d v;
  v << 63.0, 63.0, 63.0, 3.2, 3.2, 3.2;
  return v;
}

Vector6d ControllerState::default_integral_clamp() {
  Vector6d v;
  v << 0.02, 0.02, 0.02, 0.02, 0.02, 0.02;
  return v;
}

void ControllerState::reset() {
  desired = Pose6D::identity();
  initialized = false;
  integral.setZero();
}

namespace {

// Composes current (+) delta and then walks each translation component a
// few ulps toward current if final rounding pushed the recomputed offset
// past its clamp. Keeps the windup bound exact in floating point.
Pose6D compose_with_exact_clamp(const Pose6D& current, const PoseDelta& delta,
                                const LeakLimits& leak) {
  Pose6D out = pose_compose(current, delta);
  for (int i = 0; i < 3; ++i) {
    const double limit = leak.translation[i];
    for (int guard = 0; guard < 4; ++guard) {
      const double gap = out.position[i] - current.position[i];
      if (std::abs(gap) <= limit) break;
      out.position[i] = std::nextafter(out.position[i], current.position[i]);
    }
  }
  return out;
}

}  // namespace

Pose6D apply_action(ControllerState& ctrl, const Pose6D& current,
                    const PoseDelta& action) {
  if (!ctrl.initialized) {
    ctrl.desired = current;
    ctrl.initialized = true;
  }
  switch (ctrl.scheme) {
    case Scheme::Nominal:
    case Scheme::Pid: {
      ctrl.desired = pose_compose(current, action);
      return ctrl.desired;
    }
    case Scheme::Plai: {
      ctrl.desired = pose_compose(ctrl.desired, action);
      return ctrl.desired;
    }
    case Scheme::LeakyPlai: {
      ctrl.desired = pose_compose(ctrl.desired, action);
      PoseDelta gap = pose_difference(ctrl.desired, current);
      for (int i = 0; i < 3; ++i) {
        const double limit = ctrl.leak.translation[i];
        gap.translation[i] = std::clamp(gap.translation[i], -limit, limit);
      }
      const Eigen::Vector3d rv = rotation_vector(gap.rotation);
      const double angle = rv.norm();
      if (angle > ctrl.leak.rotation_angle) {
        gap.rotation =
            quaternion_from_rotation_vector(rv * (ctrl.leak.rotation_angle / angle));
      }
      ctrl.desired = compose_with_exact_clamp(current, gap, ctrl.leak);
      return ctrl.desired;
    }
  }
  return ctrl.desired;
}

}  // namespace asmkit::control
