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

#ifndef ASMKIT_HARNESS_EXPERIMENT_HPP_
#define ASMKIT_HARNESS_EXPERIMENT_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "asmkit/control/reach.hpp"
#include "asmkit/harness/cem.hpp"

namespace asmkit::harness {

enum class ExperimentKind {
  RewardAblation,      // 4 dense-reward formulations
  SapuAblation,        // 4 return filtering/weighting strategies
  CurriculumAblation,  // none / standard / sampling
  ControlAblation,     // nominal / pid / plai across disturbances
};

struct ExperimentConfig {
  std::string name = "experiment";
  ExperimentKind kind = ExperimentKind::RewardAblation;
  ToyAssetSpec asset;
  ToyEnvConfig env;
  sapu::Config sapu;
  curriculum::CurriculumState curriculum;
  CemConfig trainer;
  std::vector<std::uint64_t> seeds = {0, 1, 2, 3, 4};

  // Control-ablation settings.
  control::ReachConfig reach;
  int control_trials = 20;
  int control_goals = 3;
};

/// Parses a scenario JSON; unknown experiment names and schema violations
/// raise std::runtime_error with the offending path (e.g. "$.assets.size_m").
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct VariantSummary {
  std::string variant;
  // Learning ablations: per-seed final success/engagement rates.
  std::vector<double> final_success;
  std::vector<double> final_engagement;
  double mean_success = 0.0;
  // Control ablation: per-condition mean steady-state errors.
  std::map<std::string, double> steady_state_error;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<VariantSummary> variants;
  std::filesystem::path records_csv;
  std::filesystem::path summary_json;
};

/// Dispatches to the configured ablation, writes <out>/records.csv and
/// <out>/summary.json, and returns the in-memory summaries.
ExperimentResult run_experiment(const ExperimentConfig& config,
                                const std::filesystem::path& out_dir,
                                int threads = 0);

/// Convenience: load + run.
ExperimentResult run_experiment(const std::filesystem::path& config_path,
                                const std::filesystem::path& out_dir,
                                int threads = 0);

}  // namespace asmkit::harness

#endif  // ASMKIT_HARNESS_EXPERIMENT_HPP_
