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

#include "asmkit/harness/toy_env.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace asmkit::harness {

namespace {

PoseDelta scale_delta(const PoseDelta& d, double alpha) {
  PoseDelta out;
  out.translation = alpha * d.translation;
  out.rotation = quaternion_from_rotation_vector(alpha * rotation_vector(d.rotation));
  return out;
}

}  // namespace

const char* reward_kind_name(RewardKind k) {
  switch (k) {
    case RewardKind::SdfQuery: return "sdf";
    case RewardKind::SixDofKeypoints: return "sixdof_keypoints";
    case RewardKind::CollinearKeypoints: return "collinear_keypoints";
    case RewardKind::Chamfer: return "chamfer";
  }
  return "?";
}

std::shared_ptr<const ToyAssets> make_toy_assets(const ToyAssetSpec& spec) {
  if (spec.size <= 0.0 || spec.clearance <= 0.0) {
    throw std::invalid_argument("toy asset size and clearance must be > 0");
  }
  auto assets = std::make_shared<ToyAssets>();
  assets->spec = spec;

  const double size = spec.size;
  assets->peg_length = 2.0 * size;
  assets->bore_depth = size;
  const double wall = 0.5 * size;
  const Eigen::Vector2d plate(3.0 * size, 3.0 * size);

  geom::TriangleMesh plug;
  Eigen::Vector2d bore;
  if (spec.kind == geom::BoreShape::Round) {
    plug = geom::make_cylinder(0.5 * size, assets->peg_length, 64);
    bore = Eigen::Vector2d::Constant(size + spec.clearance);
  } else {
    const double depth_y = 0.75 * size;
    plug = geom::make_box({size, depth_y, assets->peg_length},
                          {0.0, 0.0, 0.5 * assets->peg_length});
    bore = Eigen::Vector2d(size + spec.clearance, depth_y + spec.clearance);
  }
  geom::TriangleMesh socket = geom::make_socket_plate(
      spec.kind, bore, plate, assets->bore_depth, wall, 64);

  assets->plug = std::make_shared<const geom::TriangleMesh>(std::move(plug));
  assets->socket = std::make_shared<const geom::TriangleMesh>(std::move(socket));
  assets->plug_queries = std::make_shared<const geom::MeshQueries>(*assets->plug);
  assets->socket_queries = std::make_shared<const geom::MeshQueries>(*assets->socket);

  assets->plug_grid = std::make_shared<const geom::SdfGrid>(
      geom::bake_sdf(*assets->plug, geom::default_voxel_size(*assets->plug)));

  assets->reward_surface_points =
      geom::sample_points(*assets->plug, 256, geom::SampleMode::Surface,
                          mix_seed({0xA55E75, 1}));
  // Contact points: half surface, half interior.
  assets->contact_points = geom::sample_points(*assets->plug, 48,
                                               geom::SampleMode::Surface,
                                               mix_seed({0xA55E75, 2}));
  {
    geom::PointSample vol = geom::sample_points(
        *assets->plug_queries, 48, geom::SampleMode::Volume, mix_seed({0xA55E75, 3}));
    assets->contact_points.points.insert(assets->contact_points.points.end(),
                                         vol.points.begin(), vol.points.end());
  }

  assets->plug_cloud = geom::sample_points(*assets->plug, 128,
                                           geom::SampleMode::Surface,
                                           mix_seed({0xA55E75, 4}))
                           .points;
  assets->socket_cloud = geom::sample_points(*assets->socket, 256,
                                             geom::SampleMode::Surface,
                                             mix_seed({0xA55E75, 5}))
                             .points;

  assets->collinear_keypoints =
      rewards::KeypointSet::collinear4(assets->plug->bbox);
  assets->sixdof_keypoints = rewards::KeypointSet::sixdof13(assets->plug->bbox);

  assets->target_pose =
      Pose6D(Eigen::Vector3d(0.0, 0.0, -assets->bore_depth),
             Eigen::Quaterniond::Identity());
  assets->socket_pose = Pose6D::identity();
  assets->eps_k = assets->plug->bbox_diagonal();
  return assets;
}

ToyEnv::ToyEnv(std::shared_ptr<const ToyAssets> assets, ToyEnvConfig config)
    : assets_(std::move(assets)), config_(std::move(config)) {
  socket_cloud_tree_ = std::make_unique<geom::PointKdTree>(assets_->socket_cloud);
  plug_cloud_tree_ = std::make_unique<geom::PointKdTree>(assets_->plug_cloud);
  plug_pose_ = Pose6D(Eigen::Vector3d(0, 0, assets_->spec.size),
                      Eigen::Quaterniond::Identity());
}

void ToyEnv::reset(const Pose6D& plug_start, std::uint64_t noise_seed) {
  plug_pose_ = plug_start;
  noise_rng_ = Rng(noise_seed);
  episode_max_depth_ = 0.0;
  steps_ = 0;
  done_ = false;
  success_latched_ = false;
}

double ToyEnv::depth_at(const Pose6D& pose) const {
  geom::InterpenetrationOptions opts;
  return geom::max_interpenetration(assets_->contact_points,
                                    *assets_->socket_queries, pose,
                                    assets_->socket_pose, opts);
}

bool ToyEnv::depth_exceeds(const Pose6D& pose, double tol) const {
  const Pose6D rel = geom::canonical_relative_pose(pose, assets_->socket_pose);
  for (const Eigen::Vector3d& x : assets_->contact_points.points) {
    const Eigen::Vector3d p = rel.transform_point(x);
    if (!assets_->socket_queries->contains_point(p)) continue;
    if (assets_->socket_queries->distance(p) > tol) return true;
  }
  return false;
}

double ToyEnv::delta_h() const {
  return plug_pose_.position.z() + assets_->bore_depth;
}

rewards::SuccessResult ToyEnv::status() const {
  rewards::SuccessCriteria criteria;
  criteria.task = rewards::Task::Insert;
  criteria.eps_k = assets_->eps_k;
  criteria.eps_h = 0.003;

  const auto& kp = assets_->collinear_keypoints;
  double kd_sum = 0.0;
  for (const auto& k : kp.offsets) {
    kd_sum += (plug_pose_.transform_point(k) -
               assets_->target_pose.transform_point(k))
                  .norm();
  }

  rewards::SuccessState state;
  state.delta_h = delta_h();
  state.keypoint_distance = kd_sum / kp.offsets.size();
  state.plug_tip_height = plug_pose_.position.z();
  state.socket_opening_height = 0.0;
  state.lateral_distance = plug_pose_.position.head<2>().norm();
  return rewards::check_success(state, criteria);
}

double ToyEnv::dense_reward_at(const Pose6D& pose) const {
  switch (config_.reward) {
    case RewardKind::SdfQuery:
      return rewards::sdf_reward(assets_->reward_surface_points, pose,
                                 *assets_->plug_grid, assets_->target_pose,
                                 config_.sdf_floor);
    case RewardKind::SixDofKeypoints:
      return rewards::keypoint_reward(assets_->sixdof_keypoints, pose,
                                      assets_->target_pose);
    case RewardKind::CollinearKeypoints:
      return rewards::keypoint_reward(assets_->collinear_keypoints, pose,
                                      assets_->target_pose);
    case RewardKind::Chamfer: {
      // Symmetric chamfer between the plug cloud at `pose` and the fixed
      // socket cloud, with trees prebuilt on both local sets.
      const Pose6D to_plug = pose.inverse();
      double a_to_b = 0.0;
      for (const auto& x : assets_->plug_cloud) {
        a_to_b += socket_cloud_tree_->nearest(pose.transform_point(x)).second;
      }
      double b_to_a = 0.0;
      for (const auto& s : assets_->socket_cloud) {
        b_to_a += plug_cloud_tree_->nearest(to_plug.transform_point(s)).second;
      }
      return -(a_to_b / assets_->plug_cloud.size() +
               b_to_a / assets_->socket_cloud.size());
    }
  }
  throw std::logic_error("unknown reward kind");
}

Eigen::VectorXd ToyEnv::observe() {
  const PoseDelta err = pose_difference(assets_->target_pose, plug_pose_);
  Eigen::VectorXd f(kFeatureCount);
  const double nh = config_.randomization.obs_noise_half_range;
  for (int i = 0; i < 3; ++i) {
    const double noise = nh > 0.0 ? noise_rng_.uniform(-nh, nh) : 0.0;
    f[i] = (err.translation[i] + noise) / kPosErrorNorm;
  }
  f.segment<3>(3) = rotation_vector(err.rotation) / kRotErrorNorm;
  f[6] = status().engaged ? 1.0 : 0.0;
  f[7] = 1.0;
  return f;
}

ToyEnv::StepResult ToyEnv::step(const PoseDelta& action) {
  StepResult out;
  if (done_) {
    throw std::logic_error("step() after episode end; call reset()");
  }

  PoseDelta clamped;
  for (int i = 0; i < 3; ++i) {
    clamped.translation[i] =
        std::clamp(action.translation[i], -config_.pos_action_scale[i],
                   config_.pos_action_scale[i]);
  }
  Eigen::Vector3d rv = rotation_vector(action.rotation);
  for (int i = 0; i < 3; ++i) {
    rv[i] = std::clamp(rv[i], -config_.rot_action_scale, config_.rot_action_scale);
  }
  clamped.rotation = quaternion_from_rotation_vector(rv);

  const Pose6D candidate = pose_compose(plug_pose_, clamped);
  out.d_ip = depth_at(candidate);
  if (out.d_ip > config_.contact_tol) {
    // First shrink the step along the action until feasible; resolution is
    // on the translation magnitude (rotation shrinks proportionally).
    double lo = 0.0;
    double hi = 1.0;
    const double span = std::max(clamped.translation.norm(), 1e-9);
    const int iters = std::max(
        1, static_cast<int>(std::ceil(std::log2(span / config_.bisect_resolution))));
    for (int it = 0; it < iters; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (depth_exceeds(pose_compose(plug_pose_, scale_delta(clamped, mid)),
                        config_.contact_tol)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    plug_pose_ = pose_compose(plug_pose_, scale_delta(clamped, lo));

    // Slide: resolve the blocked translation remainder axis by axis (largest
    // component first), so contact constrains the normal direction without
    // freezing tangential motion.
    const Eigen::Vector3d remaining = (1.0 - lo) * clamped.translation;
    std::array<int, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (std::abs(remaining[a]) != std::abs(remaining[b])) {
        return std::abs(remaining[a]) > std::abs(remaining[b]);
      }
      return a < b;
    });
    for (int axis : order) {
      if (std::abs(remaining[axis]) < config_.bisect_resolution) continue;
      PoseDelta slide;
      slide.translation[axis] = remaining[axis];
      double alo = 0.0;
      double ahi = 1.0;
      const int aiters = std::max(
          1, static_cast<int>(std::ceil(
                 std::log2(std::abs(remaining[axis]) / config_.bisect_resolution))));
      if (!depth_exceeds(pose_compose(plug_pose_, slide), config_.contact_tol)) {
        alo = 1.0;
      } else {
        for (int it = 0; it < aiters; ++it) {
          const double mid = 0.5 * (alo + ahi);
          if (depth_exceeds(pose_compose(plug_pose_, scale_delta(slide, mid)),
                            config_.contact_tol)) {
            ahi = mid;
          } else {
            alo = mid;
          }
        }
      }
      if (alo > 0.0) {
        plug_pose_ = pose_compose(plug_pose_, scale_delta(slide, alo));
      }
    }
  } else {
    plug_pose_ = candidate;
  }
  episode_max_depth_ = std::max(episode_max_depth_, out.d_ip);

  ++steps_;
  const rewards::SuccessResult s = status();
  // Episodes run to the horizon (the return sums all H steps); success is
  // latched so a transient insertion still counts.
  success_latched_ = success_latched_ || s.success;
  out.success = success_latched_;
  out.engaged = s.engaged;
  out.dense_reward = dense_reward_at(plug_pose_);
  out.done = steps_ >= config_.horizon;
  done_ = out.done;
  return out;
}

}  // namespace asmkit::harness
