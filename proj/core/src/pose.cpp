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

#include <cmath>

namespace asmkit {

namespace {
constexpr double kUnitNormTol = 1e-12;  // on |q|^2 - 1
}

Eigen::Quaterniond normalize_if_needed(const Eigen::Quaterniond& q) {
  const double sq = q.squaredNorm();
  if (std::abs(sq - 1.0) > kUnitNormTol) {
    return q.normalized();
  }
  return q;
}

Pose6D::Pose6D(const Eigen::Vector3d& p, const Eigen::Quaterniond& q)
    : position(p), orientation(normalize_if_needed(q)) {}

Eigen::Vector3d Pose6D::transform_point(const Eigen::Vector3d& x) const {
  return orientation * x + position;
}

Pose6D Pose6D::inverse() const {
  const Eigen::Quaterniond qi = orientation.conjugate();
  return Pose6D(qi * (-position), qi);
}

Pose6D Pose6D::operator*(const Pose6D& rhs) const {
  return Pose6D(position + orientation * rhs.position,
                normalize_if_needed(orientation * rhs.orientation));
}

PoseDelta::PoseDelta(const Eigen::Vector3d& t, const Eigen::Quaterniond& r)
    : translation(t), rotation(normalize_if_needed(r)) {}

Pose6D pose_compose(const Pose6D& base, const PoseDelta& delta) {
  Pose6D out;
  out.position = base.position + delta.translation;
  out.orientation = normalize_if_needed(base.orientation * delta.rotation);
  return out;
}

PoseDelta pose_difference(const Pose6D& a, const Pose6D& b) {
  PoseDelta d;
  d.translation = a.position - b.position;
  d.rotation = normalize_if_needed(b.orientation.conjugate() * a.orientation);
  return d;
}

Eigen::Vector3d rotation_vector(const Eigen::Quaterniond& q) {
  Eigen::Quaterniond qc = q;
  if (qc.w() < 0.0) qc.coeffs() = -qc.coeffs();
  const double vnorm = qc.vec().norm();
  if (vnorm < 1e-15) return Eigen::Vector3d::Zero();
  const double angle = 2.0 * std::atan2(vnorm, qc.w());
  return qc.vec() * (angle / vnorm);
}

Eigen::Quaterniond quaternion_from_rotation_vector(const Eigen::Vector3d& rv) {
  const double angle = rv.norm();
  if (angle < 1e-15) {
    Eigen::Quaterniond q(1.0, 0.5 * rv.x(), 0.5 * rv.y(), 0.5 * rv.z());
    return normalize_if_needed(q);
  }
  const Eigen::Vector3d axis = rv / angle;
  const double h = 0.5 * angle;
  const double s = std::sin(h);
  return Eigen::Quaterniond(std::cos(h), axis.x() * s, axis.y() * s, axis.z() * s);
}

double quaternion_angle(const Eigen::Quaterniond& a, const Eigen::Quaterniond& b) {
  // atan2 form stays well-conditioned for near-identical rotations, where
  // the acos of the dot product loses eight digits.
  const Eigen::Quaterniond rel = a.conjugate() * b;
  return 2.0 * std::atan2(rel.vec().norm(), std::abs(rel.w()));
}

}  // namespace asmkit
