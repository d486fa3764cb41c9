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

#include "asmkit/curriculum/curriculum.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace asmkit::curriculum {

namespace {
const char* mode_name(Mode m) {
  switch (m) {
    case Mode::None: return "none";
    case Mode::Standard: return "standard";
    case Mode::Sampling: return "sampling";
  }
  return "?";
}
}  // namespace

void CurriculumState::validate() const {
  if (!(dz_dec < dz_inc)) {
    throw std::invalid_argument("curriculum requires dz_dec < dz_inc");
  }
  if (dz_inc <= 0.0 || dz_dec <= 0.0) {
    throw std::invalid_argument("curriculum step sizes must be > 0");
  }
  if (z_low > z_high) {
    throw std::invalid_argument("curriculum requires z_low <= z_high");
  }
  if (z_low_min > z_low_max) {
    throw std::invalid_argument("curriculum clamp bounds inverted");
  }
  if (!(advance_threshold > revert_threshold)) {
    throw std::invalid_argument("advance threshold must exceed revert threshold");
  }
  if (stage < 0) throw std::invalid_argument("curriculum stage must be >= 0");
}

CurriculumState curriculum_update(const CurriculumState& state, double p_n) {
  state.validate();
  if (!(p_n >= 0.0 && p_n <= 1.0)) {
    throw std::invalid_argument("success rate must lie in [0, 1]");
  }
  CurriculumState next = state;
  double candidate = state.z_low;
  if (p_n > state.advance_threshold) {
    candidate = state.z_low + state.dz_inc;
  } else if (p_n < state.revert_threshold) {
    candidate = state.z_low - state.dz_dec;
  }
  candidate = std::clamp(candidate, state.z_low_min,
                         std::min(state.z_low_max, state.z_high));
  next.z_low = candidate;
  if (candidate > state.z_low) {
    next.stage = state.stage + 1;
  } else if (candidate < state.z_low) {
    next.stage = std::max(0, state.stage - 1);
  }
  return next;
}

double sample_initial_height(const CurriculumState& state, Rng& rng) {
  state.validate();
  switch (state.mode) {
    case Mode::None:
      return state.z_high;
    case Mode::Standard:
      return state.z_low;
    case Mode::Sampling:
      return rng.uniform(state.z_low, state.z_high);
  }
  throw std::logic_error("unknown curriculum mode");
}

Eigen::Vector2d sample_lateral_offset(const CurriculumState& state, double z_init,
                                      Rng& rng, double half_range) {
  state.validate();
  if (z_init <= 0.0) return Eigen::Vector2d::Zero();
  return {rng.uniform(-half_range, half_range),
          rng.uniform(-half_range, half_range)};
}

std::vector<double> run_schedule(std::span<const double> p_n_trace,
                                 CurriculumState state) {
  std::vector<double> trajectory;
  trajectory.reserve(p_n_trace.size());
  for (double p : p_n_trace) {
    state = curriculum_update(state, p);
    trajectory.push_back(state.z_low);
  }
  return trajectory;
}

void write_trace_csv(const std::vector<TraceRow>& rows,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write csv: " + path.string());
  out.precision(17);
  out << "step,p_n,z_low_m,stage,mode\n";
  for (const auto& r : rows) {
    out << r.step << ',' << r.p_n << ',' << r.z_low << ',' << r.stage << ','
        << mode_name(r.mode) << '\n';
  }
}

}  // namespace asmkit::curriculum
