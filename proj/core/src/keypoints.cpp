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

#include "asmkit/rewards/keypoints.hpp"

#include <cmath>
#include <stdexcept>

namespace asmkit::rewards {

KeypointSet KeypointSet::collinear4(const Eigen::AlignedBox3d& bbox) {
  KeypointSet out;
  out.layout = KeypointLayout::Collinear4;
  const Eigen::Vector3d c = bbox.center();
  const double z0 = bbox.min().z();
  const double z1 = bbox.max().z();
  for (int i = 0; i < 4; ++i) {
    const double z = z0 + (z1 - z0) * i / 3.0;
    out.offsets.emplace_back(c.x(), c.y(), z);
  }
  return out;
}

KeypointSet KeypointSet::sixdof13(const Eigen::AlignedBox3d& bbox) {
  KeypointSet out;
  out.layout = KeypointLayout::SixDof13;
  const Eigen::Vector3d c = bbox.center();
  const Eigen::Vector3d h = 0.5 * bbox.diagonal();
  out.offsets.push_back(c);
  for (int axis = 0; axis < 3; ++axis) {
    for (double f : {-1.0, -0.5, 0.5, 1.0}) {
      Eigen::Vector3d p = c;
      p[axis] += f * h[axis];
      out.offsets.push_back(p);
    }
  }
  return out;
}

void KeypointSet::validate() const {
  if (layout == KeypointLayout::Collinear4) {
    if (offsets.size() != 4) {
      throw std::invalid_argument("collinear4 layout needs exactly 4 keypoints");
    }
    const double x = offsets[0].x();
    const double y = offsets[0].y();
    const double spacing = offsets[1].z() - offsets[0].z();
    for (std::size_t i = 0; i < offsets.size(); ++i) {
      if (offsets[i].x() != x || offsets[i].y() != y) {
        throw std::invalid_argument("collinear4 keypoints must lie on one Z line");
      }
      if (i > 0 &&
          std::abs((offsets[i].z() - offsets[i - 1].z()) - spacing) > 1e-12) {
        throw std::invalid_argument("collinear4 keypoints must be equally spaced");
      }
    }
  } else {
    if (offsets.size() != 13) {
      throw std::invalid_argument("sixdof13 layout needs exactly 13 keypoints");
    }
  }
}

}  // namespace asmkit::rewards
