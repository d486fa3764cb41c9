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

#ifndef ASMKIT_REWARDS_KEYPOINTS_HPP_
#define ASMKIT_REWARDS_KEYPOINTS_HPP_

#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace asmkit::rewards {

enum class KeypointLayout {
  Collinear4,  // 4 points on the local Z-axis, equally spaced
  SixDof13,    // center + 4 points per local axis (13 total)
};

/// Object-local keypoint offsets. Spacing is tied to the object bounding
/// box so layouts are scale-free: Collinear4 spans the Z-extent; SixDof13
/// arms span each axis extent (outer points at the half-extent, inner
/// points halfway).
struct KeypointSet {
  KeypointLayout layout = KeypointLayout::Collinear4;
  std::vector<Eigen::Vector3d> offsets;

  static KeypointSet collinear4(const Eigen::AlignedBox3d& bbox);
  static KeypointSet sixdof13(const Eigen::AlignedBox3d& bbox);

  void validate() const;  // enforces the per-layout structure
};

}  // namespace asmkit::rewards

#endif  // ASMKIT_REWARDS_KEYPOINTS_HPP_
