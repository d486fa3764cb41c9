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

#include "asmkit/sapu/sapu.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace asmkit::sapu {

void Config::validate() const {
  if (eps_ip <= 0.0 || eps_d <= 0.0) {
    throw std::invalid_argument("sapu thresholds must be > 0");
  }
}

double depth_weight(double d, double eps_d) {
  if (d < 0.0) throw std::invalid_argument("interpenetration depth must be >= 0");
  // 2/(e^{2x}+1) == 1 - tanh(x), but stays positive and strictly monotone
  // where the tanh form saturates to 0.
  return 2.0 / (std::exp(2.0 * d / eps_d) + 1.0);
}

std::vector<EpisodeReturn> apply(std::vector<EpisodeReturn> batch,
                                 const Config& config) {
  config.validate();
  for (EpisodeReturn& ep : batch) {
    if (!std::isfinite(ep.raw_return)) {
      throw std::invalid_argument("non-finite episode return");
    }
    if (ep.d_ip_max < 0.0) {
      throw std::invalid_argument("negative interpenetration depth");
    }
    const bool pass_filter = ep.d_ip_max < config.eps_ip;
    switch (config.strategy) {
      case Strategy::Baseline:
        ep.included = true;
        ep.weighted_return = ep.raw_return;
        break;
      case Strategy::FilterOnly:
        ep.included = pass_filter;
        ep.weighted_return = pass_filter ? ep.raw_return : 0.0;
        break;
      case Strategy::WeightOnly:
        ep.included = true;
        ep.weighted_return = ep.raw_return * depth_weight(ep.d_ip_max, config.eps_d);
        break;
      case Strategy::FilterAndWeight:
        ep.included = pass_filter;
        ep.weighted_return =
            pass_filter ? ep.raw_return * depth_weight(ep.d_ip_max, config.eps_d)
                        : 0.0;
        break;
    }
  }
  return batch;
}

BatchStats batch_stats(const std::vector<EpisodeReturn>& batch) {
  BatchStats s;
  if (batch.empty()) return s;
  std::size_t included = 0;
  double depth_sum = 0.0;
  double weighted_sum = 0.0;
  for (const auto& ep : batch) {
    depth_sum += ep.d_ip_max;
    s.max_depth = std::max(s.max_depth, ep.d_ip_max);
    if (ep.included) {
      ++included;
      weighted_sum += ep.weighted_return;
    }
  }
  s.inclusion_fraction = static_cast<double>(included) / batch.size();
  s.mean_depth = depth_sum / batch.size();
  s.mean_weighted = included > 0 ? weighted_sum / included : 0.0;
  return s;
}

void write_csv(const std::vector<EpisodeReturn>& batch,
               const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path.string());
  out.precision(17);
  out << "episode_id,raw_return,d_ip_max_m,included,weighted_return\n";
  for (std::size_t i = 0; i < batch.size(); ++i) {
    out << i << ',' << batch[i].raw_return << ',' << batch[i].d_ip_max << ','
        << (batch[i].included ? 1 : 0) << ',' << batch[i].weighted_return << '\n';
  }
}

std::vector<EpisodeReturn> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open csv: " + path.string());
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty csv: " + path.string());
  std::vector<EpisodeReturn> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    EpisodeReturn ep;
    std::getline(ls, cell, ',');  // episode_id, positional
    std::getline(ls, cell, ',');
    ep.raw_return = std::stod(cell);
    std::getline(ls, cell, ',');
    ep.d_ip_max = std::stod(cell);
    std::getline(ls, cell, ',');
    ep.included = std::stoi(cell) != 0;
    std::getline(ls, cell, ',');
    ep.weighted_return = std::stod(cell);
    out.push_back(ep);
  }
  return out;
}

}  // namespace asmkit::sapu
