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

#include <doctest.h>

#include "support/oracles.hpp"

using namespace asmkit;
using harness::CemConfig;
using harness::ToyEnvConfig;

namespace {
std::shared_ptr<const harness::ToyAssets> assets16() {
  static const auto assets =
      harness::make_toy_assets({geom::BoreShape::Round, 0.016, 0.0005});
  return assets;
}

CemConfig tiny_cem(std::uint64_t seed) {
  CemConfig cem;
  cem.iterations = 3;
  cem.population = 10;
  cem.elite_fraction = 0.3;
  cem.episodes_per_candidate = 1;
  cem.eval_episodes = 8;
  cem.seed = seed;
  return cem;
}
}  // namespace

TEST_CASE("zero iterations return the initial evaluation only") {
  ToyEnvConfig env;
  env.horizon = 16;
  CemConfig cem = tiny_cem(1);
  cem.iterations = 0;
  const auto result = harness::cem_train(assets16(), env, {}, {}, cem);
  REQUIRE(result.records.size() == 1);
  CHECK(result.records[0].iteration == 0);
  CHECK(result.p_n_trace.empty());
}

TEST_CASE("identical seeds give identical training traces") {
  ToyEnvConfig env;
  env.horizon = 16;
  const auto a = harness::cem_train(assets16(), env, {}, {}, tiny_cem(7));
  const auto b = harness::cem_train(assets16(), env, {}, {}, tiny_cem(7));
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].mean_return == b.records[i].mean_return);
    CHECK(a.records[i].success_rate == b.records[i].success_rate);
    CHECK(a.records[i].z_low == b.records[i].z_low);
  }
  CHECK(a.final_success_rate == b.final_success_rate);
  CHECK(a.policy.weights == b.policy.weights);

  const auto c = harness::cem_train(assets16(), env, {}, {}, tiny_cem(8));
  CHECK(a.policy.weights != c.policy.weights);
}

TEST_CASE("thread count does not change the result") {
  ToyEnvConfig env;
  env.horizon = 16;
  CemConfig serial = tiny_cem(9);
  serial.threads = 1;
  CemConfig parallel = tiny_cem(9);
  parallel.threads = 8;
  const auto a = harness::cem_train(assets16(), env, {}, {}, serial);
  const auto b = harness::cem_train(assets16(), env, {}, {}, parallel);
  CHECK(a.policy.weights == b.policy.weights);
  CHECK(a.final_success_rate == b.final_success_rate);
}

TEST_CASE("logged z_low replays exactly through the curriculum fold") {
  ToyEnvConfig env;
  env.horizon = 16;
  curriculum::CurriculumState curr;
  const auto result = harness::cem_train(assets16(), env, {}, curr, tiny_cem(10));
  const auto replay = curriculum::run_schedule(result.p_n_trace, curr);
  CHECK(replay == result.z_low_trace);
}

TEST_CASE("config validation") {
  CemConfig cem = tiny_cem(0);
  cem.population = 5;
  CHECK_THROWS_AS(cem.validate(), std::invalid_argument);
  cem = tiny_cem(0);
  cem.elite_fraction = 0.9;
  CHECK_THROWS_AS(cem.validate(), std::invalid_argument);
}
