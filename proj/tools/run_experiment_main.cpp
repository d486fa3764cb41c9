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

#include <cstdio>

#include <CLI11.hpp>

#include "asmkit/harness/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Run a scenario-configured ablation experiment"};
  std::string config_path;
  std::string out_dir = "results";
  int threads = 0;
  app.add_option("--config", config_path, "Scenario JSON")->required();
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--threads", threads, "Worker threads (0: all cores)");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto result = asmkit::harness::run_experiment(config_path, out_dir, threads);
    std::printf("wrote %s and %s\n", result.records_csv.string().c_str(),
                result.summary_json.string().c_str());
    for (const auto& v : result.variants) {
      if (!v.final_success.empty()) {
        std::printf("  %-20s mean final success %.1f%%\n", v.variant.c_str(),
                    100.0 * v.mean_success);
      } else {
        std::printf("  %-20s", v.variant.c_str());
        for (const auto& [cond, err] : v.steady_state_error) {
          std::printf("  %s=%.3g m", cond.c_str(), err);
        }
        std::printf("\n");
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
