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

#ifndef ASMKIT_REWARDS_REWARDS_HPP_
#define ASMKIT_REWARDS_REWARDS_HPP_

#include <string>
#include <vector>

#include "asmkit/geometry/sampling.hpp"
#include "asmkit/geometry/sdf.hpp"
#include "asmkit/pose.hpp"
#include "asmkit/rewards/keypoints.hpp"

namespace asmkit::rewards {

/// Negative mean squared distance between corresponding keypoints of the
/// current and goal object poses. 0 at the goal, negative elsewhere.
double keypoint_reward(const KeypointSet& layout, const Pose6D& current,
                       const Pose6D& goal);

/// Negative symmetric chamfer distance (mean squared nearest-neighbor
/// distance in both directions). Throws on an empty cloud.
double chamfer_reward(const std::vector<Eigen::Vector3d>& cloud_a,
                      const std::vector<Eigen::Vector3d>& cloud_b);

constexpr double kDefaultSdfRewardFloor = 1e-4;  // meters

/// -log of the mean |sdf| of preselected plug-surface points, measured in
/// the field of the same object at its target pose. The mean magnitude is
/// floored before the log so the reward stays finite at perfect alignment;
/// the maximum attainable value is therefore -log(floor).
double sdf_reward(const geom::PointSample& plug_points, const Pose6D& plug_pose,
                  const geom::SdfGrid& target_grid, const Pose6D& target_pose,
                  double floor = kDefaultSdfRewardFloor);

/// Mean |sdf| of the transformed points (the quantity inside the log).
double mean_sdf_magnitude(const geom::PointSample& plug_points,
                          const Pose6D& plug_pose,
                          const geom::SdfGrid& target_grid,
                          const Pose6D& target_pose);

/// Sparse-bonus scale 1/(dh + 0.1): 10 at dh = 0, decaying with the height
/// gap at success. dh in meters, must be >= 0.
double bonus_scale(double delta_h);

struct DenseTerm {
  std::string name;
  double weight = 1.0;
};

struct SparseBonus {
  std::string name;
  double weight = 1.0;
};

struct HorizonScale {
  std::string name;
  double factor = 1.0;  // must lie in [0, 1]
};

/// Weights and horizon-level scaling factors of the return composition.
/// Horizon factors multiply the whole return; common entries are the
/// interpenetration weight, the randomization-range ratio, the
/// curriculum-difficulty ratio, and the normalized bonus scale.
struct RewardSpec {
  std::vector<DenseTerm> dense;
  std::vector<SparseBonus> bonuses;
  std::vector<HorizonScale> horizon_scales;

  void validate() const;
  double horizon_factor_product() const;
};

/// Return over one episode:
///   G = (prod of horizon factors) *
///       (sum_t sum_j w_dj * r[t][j]  +  sum_k w_sk * [triggered_k])
/// `dense_records` is one row per timestep, one column per dense term.
double compose_return(const RewardSpec& spec,
                      const std::vector<std::vector<double>>& dense_records,
                      const std::vector<bool>& triggered);

}  // namespace asmkit::rewards

#endif  // ASMKIT_REWARDS_REWARDS_HPP_
