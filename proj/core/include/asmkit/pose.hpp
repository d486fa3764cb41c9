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

#ifndef ASMKIT_POSE_HPP_
#define ASMKIT_POSE_HPP_

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace asmkit {

/// Rigid transform / state: position in meters plus a unit quaternion.
///
/// Quaternions are renormalized on construction only when they drift beyond
/// a tight tolerance, so composing with an exact identity is bit-preserving.
struct Pose6D {
  Eigen::Vector3d position{Eigen::Vector3d::Zero()};
  Eigen::Quaterniond orientation{1.0, 0.0, 0.0, 0.0};  // (w, x, y, z)

  Pose6D() = default;
  Pose6D(const Eigen::Vector3d& p, const Eigen::Quaterniond& q);

  static Pose6D identity() { return Pose6D{}; }

  /// Maps a point from this pose's local frame into the parent frame.
  Eigen::Vector3d transform_point(const Eigen::Vector3d& x) const;

  /// SE(3) inverse.
  Pose6D inverse() const;

  /// SE(3) product: (this) ∘ (rhs), i.e. rhs expressed in this frame.
  Pose6D operator*(const Pose6D& rhs) const;
};

/// Incremental pose action: world-frame translation step plus a unit
/// quaternion rotation step applied in the end-effector frame.
struct PoseDelta {
  Eigen::Vector3d translation{Eigen::Vector3d::Zero()};
  Eigen::Quaterniond rotation{1.0, 0.0, 0.0, 0.0};

  PoseDelta() = default;
  PoseDelta(const Eigen::Vector3d& t, const Eigen::Quaterniond& r);

  static PoseDelta identity() { return PoseDelta{}; }
};

/// Applies an incremental action to a pose: translation adds in the base
/// frame, rotation right-multiplies (increment expressed in the moving
/// frame). This is the state-update operator used by all action schemes.
Pose6D pose_compose(const Pose6D& base, const PoseDelta& delta);

/// Inverse of pose_compose: the delta d with pose_compose(b, d) == a.
PoseDelta pose_difference(const Pose6D& a, const Pose6D& b);

/// Returns q unchanged when already unit-norm to ~1e-12, else normalized.
Eigen::Quaterniond normalize_if_needed(const Eigen::Quaterniond& q);

/// Rotation-vector (axis * angle, radians) of a unit quaternion, with the
/// sign chosen so the angle lies in [0, pi].
Eigen::Vector3d rotation_vector(const Eigen::Quaterniond& q);

/// Unit quaternion for a rotation vector (axis * angle).
Eigen::Quaterniond quaternion_from_rotation_vector(const Eigen::Vector3d& rv);

/// Geodesic distance between two unit quaternions (radians, [0, pi]).
double quaternion_angle(const Eigen::Quaterniond& a, const Eigen::Quaterniond& b);

}  // namespace asmkit

#endif  // ASMKIT_POSE_HPP_
