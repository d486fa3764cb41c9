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

#include "asmkit/harness/cem.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace asmkit::harness {

namespace {

constexpr double kExcludedFitness = -1e30;

struct EpisodeOutcome {
  double composed_return = 0.0;
  double max_depth = 0.0;
  bool success = false;
  bool engaged = false;
};

Pose6D sample_start_pose(const curriculum::CurriculumState& curr,
                         const RandomizationSpec& rand, Rng& rng) {
  const double z = curriculum::sample_initial_height(curr, rng);
  const Eigen::Vector2d xy =
      curriculum::sample_lateral_offset(curr, z, rng, rand.plug_xy_half_range);
  Eigen::Quaterniond q = Eigen::Quaterniond::Identity();
  if (z > 0.0) {
    const double yaw = rng.uniform(-rand.plug_yaw_half_range, rand.plug_yaw_half_range);
    q = quaternion_from_rotation_vector({0.0, 0.0, yaw});
  }
  return Pose6D(Eigen::Vector3d(xy.x(), xy.y(), z), q);
}

EpisodeOutcome run_episode(ToyEnv& env, const LinearPolicy& policy,
                           const ToyEnvConfig& cfg, const Pose6D& start,
                           std::uint64_t noise_seed) {
  env.reset(start, noise_seed);
  EpisodeOutcome out;
  std::vector<std::vector<double>> dense;
  dense.reserve(cfg.horizon);
  bool triggered = false;
  while (true) {
    const Eigen::VectorXd f = env.observe();
    const PoseDelta a =
        policy.action(f, cfg.pos_action_scale, cfg.rot_action_scale);
    const ToyEnv::StepResult r = env.step(a);
    dense.push_back({r.dense_reward});
    out.engaged = out.engaged || r.engaged;
    if (r.success) triggered = true;
    if (r.done) break;
  }
  rewards::RewardSpec spec;
  spec.dense.push_back({reward_kind_name(cfg.reward), cfg.dense_weight});
  spec.bonuses.push_back({"success", cfg.success_bonus});
  out.composed_return = rewards::compose_return(spec, dense, {triggered});
  out.max_depth = env.episode_max_depth();
  out.success = triggered;
  return out;
}

int hardware_threads(int requested) {
  if (requested > 0) return requested;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Runs fn(index) for index in [0, count) over a small pool; results must be
// written to per-index slots so scheduling cannot affect the outcome.
template <typename Fn>
void parallel_for_index(int count, int threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  const int workers = std::min(threads, count);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace

PoseDelta LinearPolicy::action(const Eigen::VectorXd& features,
                               const Eigen::Vector3d& pos_scale,
                               double rot_scale) const {
  if (weights.rows() != 6 || weights.cols() != features.size()) {
    throw std::invalid_argument("policy weight shape mismatch");
  }
  const Eigen::VectorXd u = weights * features;
  PoseDelta d;
  Eigen::Vector3d rv;
  for (int i = 0; i < 3; ++i) {
    d.translation[i] = pos_scale[i] * std::clamp(u[i], -1.0, 1.0);
    rv[i] = rot_scale * std::clamp(u[3 + i], -1.0, 1.0);
  }
  d.rotation = quaternion_from_rotation_vector(rv);
  return d;
}

void CemConfig::validate() const {
  if (population < 10) throw std::invalid_argument("population must be >= 10");
  if (!(elite_fraction > 0.0 && elite_fraction <= 0.5)) {
    throw std::invalid_argument("elite fraction must lie in (0, 0.5]");
  }
  if (iterations < 0 || episodes_per_candidate < 1) {
    throw std::invalid_argument("bad trainer configuration");
  }
}

double evaluate_policy(const std::shared_ptr<const ToyAssets>& assets,
                       const ToyEnvConfig& env_config, const LinearPolicy& policy,
                       int episodes, std::uint64_t seed, double* engagement_rate) {
  const RandomizationSpec& rand = env_config.randomization;
  std::vector<char> success(episodes, 0);
  std::vector<char> engaged(episodes, 0);
  parallel_for_index(episodes, hardware_threads(0), [&](int e) {
    Rng rng(mix_seed({seed, 0xEBA1, static_cast<std::uint64_t>(e)}));
    const double z = rng.uniform(0.25 * rand.plug_z_max, 0.5 * rand.plug_z_max);
    const Eigen::Vector2d xy{
        rng.uniform(-rand.plug_xy_half_range, rand.plug_xy_half_range),
        rng.uniform(-rand.plug_xy_half_range, rand.plug_xy_half_range)};
    const double yaw =
        rng.uniform(-rand.plug_yaw_half_range, rand.plug_yaw_half_range);
    const Pose6D start(Eigen::Vector3d(xy.x(), xy.y(), z),
                       quaternion_from_rotation_vector({0.0, 0.0, yaw}));
    ToyEnv env(assets, env_config);
    const EpisodeOutcome out = run_episode(
        env, policy, env_config, start,
        mix_seed({seed, 0x105E, static_cast<std::uint64_t>(e)}));
    success[e] = out.success ? 1 : 0;
    engaged[e] = out.engaged ? 1 : 0;
  });
  const double s =
      std::accumulate(success.begin(), success.end(), 0.0) / episodes;
  if (engagement_rate != nullptr) {
    *engagement_rate =
        std::accumulate(engaged.begin(), engaged.end(), 0.0) / episodes;
  }
  return s;
}

TrainResult cem_train(const std::shared_ptr<const ToyAssets>& assets,
                      const ToyEnvConfig& env_config,
                      const sapu::Config& sapu_config,
                      const curriculum::CurriculumState& initial_curriculum,
                      const CemConfig& cem_config) {
  cem_config.validate();
  sapu_config.validate();
  initial_curriculum.validate();

  const int dim = LinearPolicy::parameter_count();
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd sigma = Eigen::VectorXd::Constant(dim, cem_config.init_sigma);

  TrainResult result;
  curriculum::CurriculumState curr = initial_curriculum;
  const int pop = cem_config.population;
  const int n_elite =
      std::max(1, static_cast<int>(std::lround(pop * cem_config.elite_fraction)));
  const int threads = hardware_threads(cem_config.threads);

  auto make_policy = [&](const Eigen::VectorXd& theta) {
    LinearPolicy p;
    p.weights = Eigen::Map<const Eigen::MatrixXd>(theta.data(), 6,
                                                  ToyEnv::kFeatureCount);
    return p;
  };

  for (int iter = 0; iter < cem_config.iterations; ++iter) {
    // Draw the whole generation up front, in candidate order.
    std::vector<Eigen::VectorXd> thetas(pop);
    for (int c = 0; c < pop; ++c) {
      Rng draw(mix_seed({cem_config.seed, 0xD4A3, static_cast<std::uint64_t>(iter),
                         static_cast<std::uint64_t>(c)}));
      Eigen::VectorXd theta(dim);
      for (int k = 0; k < dim; ++k) theta[k] = mu[k] + sigma[k] * draw.normal();
      thetas[c] = std::move(theta);
    }

    // Start poses per (candidate, episode) from the iteration's curriculum.
    const int eps = cem_config.episodes_per_candidate;
    std::vector<double> fitness(pop, 0.0);
    std::vector<int> successes(pop, 0);
    std::vector<int> engagements(pop, 0);
    std::vector<double> inclusion(pop, 0.0);

    // Common random numbers: every candidate faces the same episode starts
    // and observation-noise streams, so fitness differences are pure policy
    // differences rather than initial-condition luck.
    std::vector<Pose6D> starts(eps);
    for (int e = 0; e < eps; ++e) {
      Rng rng(mix_seed({cem_config.seed, 0x57A7, static_cast<std::uint64_t>(iter),
                        static_cast<std::uint64_t>(e)}));
      starts[e] = sample_start_pose(curr, env_config.randomization, rng);
    }

    parallel_for_index(pop, threads, [&](int c) {
      const LinearPolicy policy = make_policy(thetas[c]);
      ToyEnv env(assets, env_config);
      std::vector<sapu::EpisodeReturn> batch;
      batch.reserve(eps);
      for (int e = 0; e < eps; ++e) {
        const EpisodeOutcome out = run_episode(
            env, policy, env_config, starts[e],
            mix_seed({cem_config.seed, 0x401E, static_cast<std::uint64_t>(iter),
                      static_cast<std::uint64_t>(e)}));
        batch.push_back({out.composed_return, out.max_depth, true, 0.0});
        successes[c] += out.success ? 1 : 0;
        engagements[c] += out.engaged ? 1 : 0;
      }
      const auto processed = sapu::apply(std::move(batch), sapu_config);
      double sum = 0.0;
      int included = 0;
      for (const auto& ep : processed) {
        if (ep.included) {
          sum += ep.weighted_return;
          ++included;
        }
      }
      inclusion[c] = static_cast<double>(included) / eps;
      fitness[c] = included > 0 ? sum / included : kExcludedFitness;
    });

    // Elite selection; ties break on the lower candidate index.
    std::vector<int> order(pop);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (fitness[a] != fitness[b]) return fitness[a] > fitness[b];
      return a < b;
    });

    Eigen::VectorXd new_mu = Eigen::VectorXd::Zero(dim);
    for (int r = 0; r < n_elite; ++r) new_mu += thetas[order[r]];
    new_mu /= n_elite;
    Eigen::VectorXd var = Eigen::VectorXd::Zero(dim);
    for (int r = 0; r < n_elite; ++r) {
      const Eigen::VectorXd d = thetas[order[r]] - new_mu;
      var += d.cwiseProduct(d);
    }
    var /= n_elite;
    mu = new_mu;
    sigma = var.cwiseSqrt().cwiseMax(cem_config.sigma_floor);
    if ((sigma.array() > 100.0 * cem_config.init_sigma).any()) {
      result.variance_divergence = true;
    }

    const int total_eps = pop * eps;
    const double p_n =
        std::accumulate(successes.begin(), successes.end(), 0.0) / total_eps;
    const double engage_rate =
        std::accumulate(engagements.begin(), engagements.end(), 0.0) / total_eps;
    double mean_return = 0.0;
    int counted = 0;
    for (int c = 0; c < pop; ++c) {
      if (fitness[c] > kExcludedFitness / 2) {
        mean_return += fitness[c];
        ++counted;
      }
    }
    mean_return = counted > 0 ? mean_return / counted : 0.0;

    curr = curriculum::curriculum_update(curr, p_n);
    result.p_n_trace.push_back(p_n);
    result.z_low_trace.push_back(curr.z_low);

    TrainRecord rec;
    rec.iteration = iter;
    rec.mean_return = mean_return;
    rec.success_rate = p_n;
    rec.engagement_rate = engage_rate;
    rec.z_low = curr.z_low;
    rec.sapu_inclusion =
        std::accumulate(inclusion.begin(), inclusion.end(), 0.0) / pop;
    result.records.push_back(rec);
  }

  result.policy = make_policy(mu);
  result.final_success_rate = evaluate_policy(
      assets, env_config, result.policy, cem_config.eval_episodes,
      mix_seed({cem_config.seed, 0xF1AA1}), &result.final_engagement_rate);

  if (cem_config.iterations == 0) {
    TrainRecord rec;
    rec.iteration = 0;
    rec.success_rate = result.final_success_rate;
    rec.engagement_rate = result.final_engagement_rate;
    rec.z_low = curr.z_low;
    rec.sapu_inclusion = 1.0;
    result.records.push_back(rec);
  }
  return result;
}

}  // namespace asmkit::harness
