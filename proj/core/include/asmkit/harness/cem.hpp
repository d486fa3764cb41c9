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

#ifndef ASMKIT_HARNESS_CEM_HPP_
#define ASMKIT_HARNESS_CEM_HPP_

#include <vector>

#include "asmkit/curriculum/curriculum.hpp"
#include "asmkit/harness/toy_env.hpp"
#include "asmkit/sapu/sapu.hpp"

namespace asmkit::harness {

/// Linear feature policy: u = W * features, rows are the 6 action axes
/// (translation xyz, rotation-vector xyz). Outputs are interpreted in units
/// of the action scale: action_i = scale_i * clamp(u_i, [-1, 1]), so
/// weights of every column live on a common O(1) scale.
struct LinearPolicy {
  Eigen::MatrixXd weights;  // 6 x ToyEnv::kFeatureCount

  PoseDelta action(const Eigen::VectorXd& features,
                   const Eigen::Vector3d& pos_scale, double rot_scale) const;
  static int parameter_count() { return 6 * ToyEnv::kFeatureCount; }
};

struct CemConfig {
  int iterations = 60;
  int population = 32;
  double elite_fraction = 0.125;
  int episodes_per_candidate = 2;
  double init_sigma = 0.5;
  double sigma_floor = 0.02;
  int eval_episodes = 100;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency

  void validate() const;
};

struct TrainRecord {
  int iteration = 0;
  double mean_return = 0.0;      // mean processed return over included episodes
  double success_rate = 0.0;     // over the iteration's training episodes
  double engagement_rate = 0.0;
  double z_low = 0.0;
  double sapu_inclusion = 0.0;
};

struct TrainResult {
  std::vector<TrainRecord> records;
  LinearPolicy policy;  // final distribution mean
  double final_success_rate = 0.0;     // fixed evaluation protocol
  double final_engagement_rate = 0.0;
  bool variance_divergence = false;
  std::vector<double> p_n_trace;   // per-iteration batch success rates
  std::vector<double> z_low_trace; // z_low after each curriculum update
};

/// Cross-entropy training of the linear policy on the toy environment.
/// Episode returns pass through the return composition and the configured
/// interpenetration filtering/weighting before candidate fitness is formed;
/// the curriculum updates once per iteration from the batch success rate.
/// Fully deterministic for a fixed config and seed, independent of the
/// thread count.
TrainResult cem_train(const std::shared_ptr<const ToyAssets>& assets,
                      const ToyEnvConfig& env_config,
                      const sapu::Config& sapu_config,
                      const curriculum::CurriculumState& initial_curriculum,
                      const CemConfig& cem_config);

/// Shared evaluation protocol for trained policies: above-opening starts
/// with full lateral and yaw randomization.
double evaluate_policy(const std::shared_ptr<const ToyAssets>& assets,
                       const ToyEnvConfig& env_config, const LinearPolicy& policy,
                       int episodes, std::uint64_t seed,
                       double* engagement_rate = nullptr);

}  // namespace asmkit::harness

#endif  // ASMKIT_HARNESS_CEM_HPP_
