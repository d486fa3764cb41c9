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

#ifndef ASMKIT_CURRICULUM_CURRICULUM_HPP_
#define ASMKIT_CURRICULUM_CURRICULUM_HPP_

#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "asmkit/rng.hpp"

namespace asmkit::curriculum {

enum class Mode {
  None,      // no curriculum: initial height is always z_high
  Standard,  // initial height is always the moving lower bound z_low
  Sampling,  // initial height uniform in [z_low, z_high]
};

/// Height-curriculum state machine. Heights are measured relative to the
/// socket opening plane (negative: below the opening, partially inserted).
///
/// The lower bound rises by dz_inc when the batch success rate exceeds
/// advance_threshold, falls by dz_dec when it drops under revert_threshold,
/// and is clamped to [z_low_min, min(z_low_max, z_high)]. dz_dec < dz_inc
/// is enforced so advance/revert cycles make net forward progress.
struct CurriculumState {
  double z_low = -0.010;
  double z_high = 0.010;
  double dz_inc = 0.005;
  double dz_dec = 0.003;
  double z_low_min = -0.010;
  double z_low_max = 0.010;
  int stage = 0;
  double advance_threshold = 0.80;
  double revert_threshold = 0.10;
  Mode mode = Mode::Sampling;

  void validate() const;
};

/// One update step given the batch mean success rate p_n in [0, 1].
CurriculumState curriculum_update(const CurriculumState& state, double p_n);

/// Initial plug height for a new episode, per the configured mode.
double sample_initial_height(const CurriculumState& state, Rng& rng);

/// Lateral (x, y) perturbation, applied only when the episode starts above
/// the opening (z_init > 0); below-opening starts get (0, 0). Uniform in
/// [-half_range, half_range] per axis.
Eigen::Vector2d sample_lateral_offset(const CurriculumState& state, double z_init,
                                      Rng& rng, double half_range = 0.010);

/// Deterministic replay: folds curriculum_update over a success-rate trace
/// and returns the z_low value after each step.
std::vector<double> run_schedule(std::span<const double> p_n_trace,
                                 CurriculumState state);

struct TraceRow {
  int step = 0;
  double p_n = 0.0;
  double z_low = 0.0;
  int stage = 0;
  Mode mode = Mode::Sampling;
};

/// CSV with header: step,p_n,z_low_m,stage,mode
void write_trace_csv(const std::vector<TraceRow>& rows,
                     const std::filesystem::path& path);

}  // namespace asmkit::curriculum

#endif  // ASMKIT_CURRICULUM_CURRICULUM_HPP_
