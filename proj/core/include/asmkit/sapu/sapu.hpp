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

#ifndef ASMKIT_SAPU_SAPU_HPP_
#define ASMKIT_SAPU_SAPU_HPP_

#include <filesystem>
#include <vector>

namespace asmkit::sapu {

// Simulation-aware return post-processing: episodes whose worst mesh
// interpenetration exceeds a trust threshold are dropped from the update,
// and surviving returns are down-weighted smoothly with depth, so a
// learner cannot profit from contact artifacts.

enum class Strategy {
  Baseline,         // ignore interpenetration information
  FilterOnly,       // drop episodes with d >= eps_ip
  WeightOnly,       // weight all returns by 1 - tanh(d / eps_d)
  FilterAndWeight,  // drop, then weight the survivors
};

struct Config {
  Strategy strategy = Strategy::FilterAndWeight;
  double eps_ip = 0.001;  // filter threshold, meters
  double eps_d = 0.001;   // weighting scale, meters

  void validate() const;
};

struct EpisodeReturn {
  double raw_return = 0.0;
  double d_ip_max = 0.0;  // meters, >= 0
  // Outputs of apply().
  bool included = true;
  double weighted_return = 0.0;  // 0 when excluded
};

/// 1 - tanh(d / eps_d): 1 at zero depth, strictly decreasing, -> 0.
double depth_weight(double d, double eps_d);

/// Applies the configured strategy episode-wise; order preserving, and
/// inclusion uses the strict d < eps_ip comparison (a depth exactly at the
/// threshold is excluded under filter modes).
std::vector<EpisodeReturn> apply(std::vector<EpisodeReturn> batch,
                                 const Config& config);

struct BatchStats {
  double inclusion_fraction = 0.0;
  double mean_depth = 0.0;      // all episodes (informational)
  double max_depth = 0.0;       // all episodes
  double mean_weighted = 0.0;   // included episodes only
};

BatchStats batch_stats(const std::vector<EpisodeReturn>& batch);

/// CSV with header: episode_id,raw_return,d_ip_max_m,included,weighted_return
void write_csv(const std::vector<EpisodeReturn>& batch,
               const std::filesystem::path& path);
std::vector<EpisodeReturn> read_csv(const std::filesystem::path& path);

}  // namespace asmkit::sapu

#endif  // ASMKIT_SAPU_SAPU_HPP_
