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

#include "asmkit/rewards/rewards.hpp"

#include <cmath>
#include <stdexcept>

#include "asmkit/geometry/kdtree.hpp"

namespace asmkit::rewards {

double keypoint_reward(const KeypointSet& layout, const Pose6D& current,
                       const Pose6D& goal) {
  layout.validate();
  double sum = 0.0;
  for (const Eigen::Vector3d& k : layout.offsets) {
    sum += (current.transform_point(k) - goal.transform_point(k)).squaredNorm();
  }
  return -sum / static_cast<double>(layout.offsets.size());
}

double chamfer_reward(const std::vector<Eigen::Vector3d>& cloud_a,
                      const std::vector<Eigen::Vector3d>& cloud_b) {
  if (cloud_a.empty() || cloud_b.empty()) {
    throw std::invalid_argument("chamfer distance needs non-empty clouds");
  }
  const geom::PointKdTree tree_a(cloud_a);
  const geom::PointKdTree tree_b(cloud_b);
  double a_to_b = 0.0;
  for (const auto& p : cloud_a) a_to_b += tree_b.nearest(p).second;
  double b_to_a = 0.0;
  for (const auto& p : cloud_b) b_to_a += tree_a.nearest(p).second;
  return -(a_to_b / static_cast<double>(cloud_a.size()) +
           b_to_a / static_cast<double>(cloud_b.size()));
}

double mean_sdf_magnitude(const geom::PointSample& plug_points,
                          const Pose6D& plug_pose,
                          const geom::SdfGrid& target_grid,
                          const Pose6D& target_pose) {
  if (plug_points.points.empty()) {
    throw std::invalid_argument("sdf reward needs a non-empty point set");
  }
  const Pose6D rel = target_pose.inverse() * plug_pose;
  double sum = 0.0;
  for (const Eigen::Vector3d& x : plug_points.points) {
    sum += std::abs(target_grid.query(rel.transform_point(x)));
  }
  return sum / static_cast<double>(plug_points.points.size());
}

double sdf_reward(const geom::PointSample& plug_points, const Pose6D& plug_pose,
                  const geom::SdfGrid& target_grid, const Pose6D& target_pose,
                  double floor) {
  if (floor <= 0.0) throw std::invalid_argument("sdf reward floor must be > 0");
  const double m =
      mean_sdf_magnitude(plug_points, plug_pose, target_grid, target_pose);
  return -std::log(std::max(m, floor));
}

double bonus_scale(double delta_h) {
  if (delta_h < 0.0) throw std::invalid_argument("delta_h must be >= 0");
  return 1.0 / (delta_h + 0.1);
}

void RewardSpec::validate() const {
  for (const auto& t : dense) {
    if (!std::isfinite(t.weight)) {
      throw std::invalid_argument("dense weight not finite: " + t.name);
    }
  }
  for (const auto& b : bonuses) {
    if (!std::isfinite(b.weight)) {
      throw std::invalid_argument("bonus weight not finite: " + b.name);
    }
  }
  for (const auto& h : horizon_scales) {
    if (!(h.factor >= 0.0 && h.factor <= 1.0)) {
      throw std::invalid_argument("horizon scaling factor outside [0,1]: " + h.name);
    }
  }
}

double RewardSpec::horizon_factor_product() const {
  double prod = 1.0;
  for (const auto& h : horizon_scales) prod *= h.factor;
  return prod;
}

double compose_return(const RewardSpec& spec,
                      const std::vector<std::vector<double>>& dense_records,
                      const std::vector<bool>& triggered) {
  spec.validate();
  if (triggered.size() != spec.bonuses.size()) {
    throw std::invalid_argument("trigger flags do not match bonus count");
  }
  double inner = 0.0;
  for (const auto& row : dense_records) {
    if (row.size() != spec.dense.size()) {
      throw std::invalid_argument("dense record width does not match term count");
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      inner += spec.dense[j].weight * row[j];
    }
  }
  for (std::size_t k = 0; k < spec.bonuses.size(); ++k) {
    if (triggered[k]) inner += spec.bonuses[k].weight;
  }
  return spec.horizon_factor_product() * inner;
}

}  // namespace asmkit::rewards
