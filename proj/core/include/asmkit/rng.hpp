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

#ifndef ASMKIT_RNG_HPP_
#define ASMKIT_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Core>

namespace asmkit {

// Deterministic random stream. std::mt19937_64 has a standardized sequence,
// and all variate mappings below are implemented in-repo, so identical seeds
// give identical draws on every platform. The std::*_distribution adapters
// are deliberately not used (their mappings are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n), n >= 1.
  std::uint64_t uniform_index(std::uint64_t n) {
    // Rejection-free multiply-shift; bias < 2^-64, irrelevant at our scales.
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(gen_()) * n) >> 64);
  }

  /// Standard normal via Box-Muller (deterministic, caches the spare).
  double normal();

  Eigen::Vector3d uniform_in_box(const Eigen::Vector3d& lo,
                                 const Eigen::Vector3d& hi) {
    return {uniform(lo.x(), hi.x()), uniform(lo.y(), hi.y()),
            uniform(lo.z(), hi.z())};
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Hash-combines a list of 64-bit values into a derived stream seed
/// (splitmix64 finalizer chain). Used to give sub-tasks independent,
/// reproducible streams from one master seed.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts);

}  // namespace asmkit

#endif  // ASMKIT_RNG_HPP_
