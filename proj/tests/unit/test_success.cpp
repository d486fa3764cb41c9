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

#include "asmkit/rewards/success.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace asmkit::rewards;

namespace {
SuccessState insert_state(double dh, double kd) {
  SuccessState s;
  s.delta_h = dh;
  s.keypoint_distance = kd;
  s.plug_tip_height = -0.005;
  s.socket_opening_height = 0.0;
  s.lateral_distance = 0.001;
  return s;
}
}  // namespace

TEST_CASE("insert success inside both thresholds") {
  SuccessCriteria c;
  c.task = Task::Insert;  // defaults eps_h = 3 mm, eps_k = 10 cm
  const auto r = check_success(insert_state(0.002, 0.05), c);
  CHECK(r.success);
}

TEST_CASE("insert fails when the height gap exceeds 3 mm") {
  SuccessCriteria c;
  c.task = Task::Insert;
  CHECK_FALSE(check_success(insert_state(0.004, 0.05), c).success);
}

TEST_CASE("partial insertion engages without success") {
  SuccessCriteria c;
  c.task = Task::Insert;
  // Tip 5 mm below the opening, full depth not reached.
  SuccessState s = insert_state(0.011, 0.05);
  s.plug_tip_height = -0.005;
  const auto r = check_success(s, c);
  CHECK(r.engaged);
  CHECK_FALSE(r.success);
}

TEST_CASE("engagement needs the tip below the opening") {
  SuccessCriteria c;
  c.task = Task::Insert;
  SuccessState s = insert_state(0.02, 0.05);
  s.plug_tip_height = 0.004;
  CHECK_FALSE(check_success(s, c).engaged);
}

TEST_CASE("pick success lifts by twice the object extent") {
  SuccessCriteria c;
  c.task = Task::Pick;
  SuccessState s;
  s.object_height = 0.05;
  s.table_height = 0.0;
  s.object_extent = 0.016;
  CHECK(check_success(s, c).success);
  s.object_height = 0.03;
  CHECK_FALSE(check_success(s, c).success);
}

TEST_CASE("place compares the keypoint distance") {
  SuccessCriteria c;
  c.task = Task::Place;
  SuccessState s;
  s.keypoint_distance = 0.05;
  CHECK(check_success(s, c).success);
  s.keypoint_distance = 0.15;
  CHECK_FALSE(check_success(s, c).success);
}

TEST_CASE("gear uses the insert rule") {
  SuccessCriteria c;
  c.task = Task::Gear;
  CHECK(check_success(insert_state(0.001, 0.02), c).success);
}

TEST_CASE("missing fields raise with the field name") {
  SuccessCriteria c;
  c.task = Task::Insert;
  SuccessState s;  // all empty
  CHECK_THROWS_WITH_AS(check_success(s, c),
                       "check_success: missing field delta_h",
                       std::invalid_argument);

  c.task = Task::Pick;
  CHECK_THROWS_AS(check_success(s, c), std::invalid_argument);
}

TEST_CASE("thresholds must be positive") {
  SuccessCriteria c;
  c.eps_k = 0.0;
  CHECK_THROWS_AS(check_success(SuccessState{}, c), std::invalid_argument);
}
