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

#include "asmkit/control/reach.hpp"

#include <cmath>

#include "asmkit/rng.hpp"

namespace asmkit::control {

namespace {

double quantize(double x, double q) {
  if (q <= 0.0) return x;
  return std::round(x / q) * q;
}

Eigen::Vector3d quantize(const Eigen::Vector3d& v, double q) {
  return {quantize(v.x(), q), quantize(v.y(), q), quantize(v.z(), q)};
}

Disturbances make_disturbances(const ReachConfig& cfg) {
  Disturbances d;
  switch (cfg.disturbance) {
    case DisturbanceKind::Ideal:
      break;
    case DisturbanceKind::Friction:
      d.coulomb_force = cfg.friction_force;
      break;
    case DisturbanceKind::Gravity:
      d.gravity_bias = Eigen::Vector3d(0.0, 0.0, -cfg.gravity_accel);
      break;
  }
  return d;
}

PoseDelta scripted_policy(const ReachConfig& cfg, const Pose6D& observed) {
  const PoseDelta err = pose_difference(cfg.goal, observed);
  PoseDelta a;
  for (int i = 0; i < 3; ++i) {
    a.translation[i] = std::clamp(cfg.policy_gain * err.translation[i],
                                  -cfg.pos_action_scale[i], cfg.pos_action_scale[i]);
  }
  Eigen::Vector3d rv = rotation_vector(err.rotation);
  for (int i = 0; i < 3; ++i) {
    rv[i] = std::clamp(cfg.policy_gain * quantize(rv[i], cfg.obs_quantum_rot),
                       -cfg.rot_action_scale[i], cfg.rot_action_scale[i]);
  }
  a.rotation = quaternion_from_rotation_vector(rv);
  return a;
}

}  // namespace

Eigen::Vector3d default_pos_action_scale(Scheme scheme) {
  if (scheme == Scheme::Plai || scheme == Scheme::LeakyPlai) {
    return {0.0005, 0.0005, 0.0005};
  }
  return {0.01, 0.01, 0.01};
}

Eigen::Vector3d default_rot_action_scale(Scheme scheme) {
  if (scheme == Scheme::Plai || scheme == Scheme::LeakyPlai) {
    return {0.001, 0.001, 0.001};
  }
  return {0.01, 0.01, 0.01};
}

ReachResult run_reach_episode(const ReachConfig& config) {
  PlantState plant;
  plant.pose = config.start;
  plant.mass = config.mass;
  plant.inertia = config.inertia;
  plant.disturbances = make_disturbances(config);

  ControllerState ctrl = config.controller;
  ctrl.scheme = config.scheme;
  ctrl.reset();

  ReachResult result;
  result.pos_error.reserve(config.control_steps);
  result.pos_error_norm.reserve(config.control_steps);

  for (int step = 0; step < config.control_steps; ++step) {
    Pose6D observed = plant.pose;
    observed.position = quantize(observed.position, config.obs_quantum_pos);

    const PoseDelta action = scripted_policy(config, observed);
    result.states.push_back(plant.pose.position);
    const Pose6D setpoint = apply_action(ctrl, plant.pose, action);

    for (int k = 0; k < config.control_decimation; ++k) {
      const Vector6d wrench = tracking_wrench(ctrl, setpoint, plant, config.physics_dt);
      if (k == 0) result.wrenches.push_back(wrench);
      step_plant(plant, wrench, config.physics_dt);
    }

    result.actions.push_back(action);
    result.setpoints.push_back(setpoint);
    const Eigen::Vector3d err = config.goal.position - plant.pose.position;
    result.pos_error.push_back(err);
    result.pos_error_norm.push_back(err.norm());
    result.ang_error.push_back(
        quaternion_angle(config.goal.orientation, plant.pose.orientation));
  }

  const int n = config.control_steps;
  const int tail = std::max(1, n / 10);
  double pos_sum = 0.0;
  double ang_sum = 0.0;
  for (int i = n - tail; i < n; ++i) {
    pos_sum += result.pos_error_norm[i];
    ang_sum += result.ang_error[i];
  }
  result.steady_state_error = pos_sum / tail;
  result.steady_state_ang_error = ang_sum / tail;
  return result;
}

double mean_steady_state_error(const ReachConfig& base, int trials,
                               std::uint64_t seed) {
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed({seed, static_cast<std::uint64_t>(t)}));
    ReachConfig cfg = base;
    cfg.start.position += Eigen::Vector3d(rng.uniform(-0.02, 0.02),
                                          rng.uniform(-0.02, 0.02),
                                          rng.uniform(-0.02, 0.02));
    cfg.goal.position += Eigen::Vector3d(rng.uniform(-0.01, 0.01),
                                         rng.uniform(-0.01, 0.01),
                                         rng.uniform(-0.01, 0.01));
    sum += run_reach_episode(cfg).steady_state_error;
  }
  return sum / trials;
}

PidTuneResult tune_pid(const ReachConfig& base, int trials, std::uint64_t seed,
                       const std::vector<double>& ki_grid) {
  const std::vector<double> grid =
      ki_grid.empty() ? std::vector<double>{0.0, 2.0, 5.0, 10.0, 25.0, 50.0,
                                            100.0, 200.0, 400.0}
                      : ki_grid;
  PidTuneResult out;
  double best = std::numeric_limits<double>::infinity();
  for (double ki : grid) {
    ReachConfig cfg = base;
    cfg.scheme = Scheme::Pid;
    cfg.controller.ki = Vector6d::Constant(ki);
    const double err = mean_steady_state_error(cfg, trials, seed);
    out.grid.emplace_back(ki, err);
    if (err < best) {
      best = err;
      out.best_ki = ki;
    }
  }
  return out;
}

}  // namespace asmkit::control
