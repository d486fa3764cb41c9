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

#include <doctest.h>

#include <fstream>

#include "support/oracles.hpp"

using namespace asmkit;
using curriculum::CurriculumState;
using curriculum::Mode;

TEST_CASE("update rule: advance, revert, hold") {
  CurriculumState s;  // defaults: z_low -0.010, dz_inc 0.005, dz_dec 0.003
  const auto adv = curriculum::curriculum_update(s, 0.85);
  CHECK(adv.z_low == doctest::Approx(-0.005).epsilon(1e-15));
  CHECK(adv.stage == 1);

  const auto rev = curriculum::curriculum_update(s, 0.05);
  CHECK(rev.z_low == doctest::Approx(-0.010).epsilon(1e-15));  // clamped at z_low_min
  CHECK(rev.stage == 0);

  const auto hold = curriculum::curriculum_update(s, 0.50);
  CHECK(hold.z_low == s.z_low);
  CHECK(hold.stage == 0);
}

TEST_CASE("thresholds are strict inequalities") {
  CurriculumState s;
  CHECK(curriculum::curriculum_update(s, 0.80).z_low == s.z_low);
  CHECK(curriculum::curriculum_update(s, 0.10).z_low == s.z_low);
}

TEST_CASE("hysteresis: one advance then one revert nets +2 mm") {
  CurriculumState s;
  s.z_low = 0.0;
  s.z_low_min = -0.010;
  auto after = curriculum::curriculum_update(s, 0.9);
  after = curriculum::curriculum_update(after, 0.05);
  CHECK(after.z_low == doctest::Approx(0.002).epsilon(1e-12));
}

TEST_CASE("z_low never exceeds z_high nor escapes the clamps") {
  CurriculumState s;
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    s = curriculum::curriculum_update(s, rng.uniform());
    CHECK(s.z_low <= s.z_high + 1e-15);
    CHECK(s.z_low >= s.z_low_min - 1e-15);
    CHECK(s.z_low <= s.z_low_max + 1e-15);
    CHECK(s.stage >= 0);
  }
}

TEST_CASE("dz_dec < dz_inc is enforced") {
  CurriculumState s;
  s.dz_dec = s.dz_inc;
  CHECK_THROWS_AS(curriculum::curriculum_update(s, 0.5), std::invalid_argument);
}

TEST_CASE("success rate outside [0,1] is rejected") {
  CurriculumState s;
  CHECK_THROWS_AS(curriculum::curriculum_update(s, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(curriculum::curriculum_update(s, 1.1), std::invalid_argument);
}

TEST_CASE("initial height per mode") {
  CurriculumState s;
  Rng rng(4);

  s.mode = Mode::None;
  for (int i = 0; i < 10; ++i) {
    CHECK(curriculum::sample_initial_height(s, rng) == s.z_high);
  }
  s.mode = Mode::Standard;
  for (int i = 0; i < 10; ++i) {
    CHECK(curriculum::sample_initial_height(s, rng) == s.z_low);
  }
  s.mode = Mode::Sampling;
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double z = curriculum::sample_initial_height(s, rng);
    CHECK(z >= s.z_low);
    CHECK(z <= s.z_high);
    sum += z;
  }
  const double expected_mean = 0.5 * (s.z_low + s.z_high);
  const double range = s.z_high - s.z_low;
  CHECK(std::abs(sum / n - expected_mean) < 0.01 * range);
}

TEST_CASE("lateral offset is gated on starting above the opening") {
  CurriculumState s;
  Rng rng(5);
  CHECK(curriculum::sample_lateral_offset(s, -0.001, rng) ==
        Eigen::Vector2d::Zero());
  CHECK(curriculum::sample_lateral_offset(s, 0.0, rng) == Eigen::Vector2d::Zero());

  double min_v = 1.0, max_v = -1.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d xy = curriculum::sample_lateral_offset(s, 0.005, rng);
    min_v = std::min({min_v, xy.x(), xy.y()});
    max_v = std::max({max_v, xy.x(), xy.y()});
    sum += xy.x() + xy.y();
  }
  CHECK(max_v <= 0.01);
  CHECK(min_v >= -0.01);
  CHECK(std::abs(sum / (2 * n)) < 1e-3);
}

TEST_CASE("run_schedule replays the documented hand fold") {
  CurriculumState s;  // z_low -0.010, bounds [-0.010, 0.010]
  const std::vector<double> trace = {0.9, 0.9, 0.05};
  const auto traj = curriculum::run_schedule(trace, s);
  REQUIRE(traj.size() == 3);
  CHECK(traj[0] == doctest::Approx(-0.005).epsilon(1e-15));
  CHECK(traj[1] == doctest::Approx(0.000).epsilon(1e-15));
  CHECK(traj[2] == doctest::Approx(-0.003).epsilon(1e-15));
}

TEST_CASE("run_schedule matches the independent fold on random traces") {
  Rng rng(6);
  for (int rep = 0; rep < 10; ++rep) {
    CurriculumState s;
    std::vector<double> trace;
    for (int i = 0; i < 200; ++i) trace.push_back(rng.uniform());
    const auto lib = curriculum::run_schedule(trace, s);
    const auto ind = oracles::curriculum_fold(
        trace, s.z_low, s.z_high, s.dz_inc, s.dz_dec, s.z_low_min, s.z_low_max,
        s.advance_threshold, s.revert_threshold);
    CHECK(lib == ind);
  }
}

TEST_CASE("empty and constant traces") {
  CurriculumState s;
  CHECK(curriculum::run_schedule({}, s).empty());
  const std::vector<double> flat(20, 0.5);
  const auto traj = curriculum::run_schedule(flat, s);
  for (double z : traj) CHECK(z == s.z_low);
}

TEST_CASE("trace csv writes the documented columns") {
  const auto path = std::filesystem::temp_directory_path() / "asmkit_curr.csv";
  curriculum::write_trace_csv({{0, 0.5, -0.01, 0, Mode::Sampling}}, path);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,p_n,z_low_m,stage,mode");
}
