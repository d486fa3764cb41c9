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

#ifndef ASMKIT_HARNESS_TOY_ENV_HPP_
#define ASMKIT_HARNESS_TOY_ENV_HPP_

#include <memory>

#include "asmkit/geometry/interpenetration.hpp"
#include "asmkit/geometry/kdtree.hpp"
#include "asmkit/geometry/primitives.hpp"
#include "asmkit/rewards/rewards.hpp"
#include "asmkit/rewards/success.hpp"
#include "asmkit/rng.hpp"

namespace asmkit::harness {

struct ToyAssetSpec {
  geom::BoreShape kind = geom::BoreShape::Round;
  double size = 0.016;        // peg max cross-section dimension, m
  double clearance = 0.0005;  // added to the bore cross-section, m
};

/// Procedurally generated peg + socket pair with everything precomputed
/// that episode evaluation needs. The socket frame is the world frame: the
/// bore opening plane is z = 0 and the bore floor z = -bore_depth. The peg
/// mesh lives in a local frame with the tip (bottom) center at the origin,
/// so a plug pose's position z is the tip height above the opening.
struct ToyAssets {
  ToyAssetSpec spec;
  std::shared_ptr<const geom::TriangleMesh> plug;
  std::shared_ptr<const geom::TriangleMesh> socket;
  std::shared_ptr<const geom::MeshQueries> plug_queries;
  std::shared_ptr<const geom::MeshQueries> socket_queries;
  std::shared_ptr<const geom::SdfGrid> plug_grid;  // plug-local field

  geom::PointSample reward_surface_points;  // plug surface, local frame
  geom::PointSample contact_points;         // surface+volume mix, local frame
  std::vector<Eigen::Vector3d> plug_cloud;  // chamfer clouds (local / world)
  std::vector<Eigen::Vector3d> socket_cloud;

  rewards::KeypointSet collinear_keypoints;  // plug-local
  rewards::KeypointSet sixdof_keypoints;

  Pose6D target_pose;  // fully inserted plug pose
  Pose6D socket_pose;  // identity; sockets are fixtured
  double bore_depth = 0.0;
  double peg_length = 0.0;
  double eps_k = 0.0;  // success keypoint threshold: plug bbox diagonal
};

std::shared_ptr<const ToyAssets> make_toy_assets(const ToyAssetSpec& spec);

enum class RewardKind { SdfQuery, SixDofKeypoints, CollinearKeypoints, Chamfer };

const char* reward_kind_name(RewardKind k);

/// Initial-state randomization ranges (uniform draws).
struct RandomizationSpec {
  double plug_xy_half_range = 0.010;       // m
  double plug_z_min = 0.0;                 // m, used without a curriculum
  double plug_z_max = 0.020;               // m
  double plug_yaw_half_range = 5.0 * M_PI / 180.0;  // rad
  double obs_noise_half_range = 0.001;     // m
};

struct ToyEnvConfig {
  RewardKind reward = RewardKind::SdfQuery;
  int horizon = 48;
  double contact_tol = 1e-4;        // m
  double bisect_resolution = 1e-5;  // m
  Eigen::Vector3d pos_action_scale{0.002, 0.002, 0.002};
  double rot_action_scale = 0.02;  // rad per axis
  double sdf_floor = rewards::kDefaultSdfRewardFloor;
  double dense_weight = 1.0;   // weight of the configured dense term
  double success_bonus = 10.0;
  RandomizationSpec randomization;
};

/// Kinematic peg-in-hole environment with penetration-rejection projection:
/// a step that would interpenetrate deeper than contact_tol is shortened
/// along the action by bisection, and the unprojected depth is recorded for
/// the return post-processing.
class ToyEnv {
 public:
  ToyEnv(std::shared_ptr<const ToyAssets> assets, ToyEnvConfig config);

  struct StepResult {
    double dense_reward = 0.0;
    double d_ip = 0.0;  // pre-projection depth of this step
    bool done = false;
    bool success = false;
    bool engaged = false;
  };

  void reset(const Pose6D& plug_start, std::uint64_t noise_seed);
  StepResult step(const PoseDelta& action);

  /// Noisy policy features: position error (3), rotation-vector error (3),
  /// engaged flag, constant bias. Noise on the position error only. Errors
  /// are scaled to O(1) so policy weights live on a common scale.
  Eigen::VectorXd observe();
  static constexpr int kFeatureCount = 8;
  static constexpr double kPosErrorNorm = 0.02;  // meters -> feature unit
  static constexpr double kRotErrorNorm = 0.1;   // radians -> feature unit

  const Pose6D& plug_pose() const { return plug_pose_; }
  double episode_max_depth() const { return episode_max_depth_; }
  int steps_taken() const { return steps_; }
  double depth_at(const Pose6D& pose) const;  // exact-mesh interpenetration
  rewards::SuccessResult status() const;
  double delta_h() const;  // tip height above the bore floor
  const ToyEnvConfig& config() const { return config_; }
  const ToyAssets& assets() const { return *assets_; }

  double dense_reward_at(const Pose6D& pose) const;

 private:
  bool depth_exceeds(const Pose6D& pose, double tol) const;

  std::shared_ptr<const ToyAssets> assets_;
  ToyEnvConfig config_;
  Pose6D plug_pose_;
  Rng noise_rng_{0};
  double episode_max_depth_ = 0.0;
  int steps_ = 0;
  bool done_ = false;
  bool success_latched_ = false;
  std::unique_ptr<geom::PointKdTree> socket_cloud_tree_;
  std::unique_ptr<geom::PointKdTree> plug_cloud_tree_;  // local frame
};

}  // namespace asmkit::harness

#endif  // ASMKIT_HARNESS_TOY_ENV_HPP_
