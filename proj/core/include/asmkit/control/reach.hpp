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

#ifndef ASMKIT_CONTROL_REACH_HPP_
#define ASMKIT_CONTROL_REACH_HPP_

#include <vector>

#include "asmkit/control/plant.hpp"

namespace asmkit::control {

enum class DisturbanceKind { Ideal, Friction, Gravity };

/// Closed-loop reach evaluation: a scripted saturating-proportional policy
/// emits incremental pose actions at the control rate; the selected scheme
/// turns them into setpoints; the TSI loop drives the disturbed plant at
/// the physics rate.
struct ReachConfig {
  Scheme scheme = Scheme::Plai;
  DisturbanceKind disturbance = DisturbanceKind::Ideal;

  Pose6D start;
  Pose6D goal;

  double physics_dt = 1.0 / 120.0;
  int control_decimation = 2;  // control at every 2nd physics step (60 Hz)
  int control_steps = 900;

  // Policy: a = clamp(gain * (goal (-) observed), action_scale), with the
  // observed pose quantized to a fixed resolution (a stand-in for encoder /
  // state-estimate granularity; keeps terminal behavior off the float floor).
  double policy_gain = 1.0;
  Eigen::Vector3d pos_action_scale{0.0005, 0.0005, 0.0005};
  Eigen::Vector3d rot_action_scale{0.001, 0.001, 0.001};
  double obs_quantum_pos = 1e-5;  // meters; 0 disables
  double obs_quantum_rot = 1e-4;  // radians; 0 disables

  ControllerState controller;

  // Disturbance magnitudes used by the named conditions.
  double friction_force = 0.15;  // N
  double gravity_accel = 0.12;   // m/s^2, applied along -z

  double mass = 1.0;
  double inertia = 0.05;
};

/// Per-scheme deployment action scales (fine steps for the integrating
/// schemes, coarse for nominal/pid).
Eigen::Vector3d default_pos_action_scale(Scheme scheme);
Eigen::Vector3d default_rot_action_scale(Scheme scheme);

struct ReachResult {
  std::vector<Eigen::Vector3d> pos_error;  // goal - state, per control step
  std::vector<double> pos_error_norm;
  std::vector<double> ang_error;
  std::vector<Pose6D> setpoints;
  std::vector<PoseDelta> actions;
  std::vector<Eigen::Vector3d> states;  // plant position when acting
  std::vector<Vector6d> wrenches;  // wrench commanded right after each action
  double steady_state_error = 0.0;      // mean pos error norm, last 10%
  double steady_state_ang_error = 0.0;  // mean angular error, last 10%
};

ReachResult run_reach_episode(const ReachConfig& config);

/// Mean steady-state position error over a batch of randomized trials
/// (start/goal jitter derived from `seed`).
double mean_steady_state_error(const ReachConfig& base, int trials,
                               std::uint64_t seed);

struct PidTuneResult {
  double best_ki = 0.0;
  std::vector<std::pair<double, double>> grid;  // (ki, mean error)
};

/// Grid search over the PID integral gain for one disturbance condition,
/// scoring each candidate with mean_steady_state_error. The default grid
/// includes 0 (plain PD).
PidTuneResult tune_pid(const ReachConfig& base, int trials, std::uint64_t seed,
                       const std::vector<double>& ki_grid = {});

}  // namespace asmkit::control

#endif  // ASMKIT_CONTROL_REACH_HPP_
