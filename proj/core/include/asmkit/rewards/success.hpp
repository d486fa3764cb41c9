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

#ifndef ASMKIT_REWARDS_SUCCESS_HPP_
#define ASMKIT_REWARDS_SUCCESS_HPP_

#include <optional>

namespace asmkit::rewards {

enum class Task { Pick, Place, Insert, Gear };

struct SuccessCriteria {
  Task task = Task::Insert;
  double eps_k = 0.10;   // keypoint distance threshold, meters
  double eps_h = 0.003;  // height threshold, meters

  void validate() const;
};

/// Geometric quantities consumed by check_success. Tasks require different
/// subsets; a missing required field raises std::invalid_argument.
struct SuccessState {
  // Insert / Gear.
  std::optional<double> delta_h;            // plug base above socket base, m
  std::optional<double> keypoint_distance;  // plug-vs-socket keypoint error, m
  // Engagement (Insert / Gear).
  std::optional<double> plug_tip_height;        // m
  std::optional<double> socket_opening_height;  // m
  std::optional<double> lateral_distance;       // m
  // Pick.
  std::optional<double> object_height;  // current object z, m
  std::optional<double> table_height;   // table surface z, m
  std::optional<double> object_extent;  // object's own height, m
};

struct SuccessResult {
  bool success = false;
  bool engaged = false;
};

/// Insert/Gear: success when delta_h < eps_h and the keypoint distance is
/// under eps_k; engaged when the plug tip sits below the socket opening
/// with lateral error under eps_k. Place: keypoint distance under eps_k.
/// Pick: object lifted above the table by twice its own extent.
SuccessResult check_success(const SuccessState& state,
                            const SuccessCriteria& criteria);

}  // namespace asmkit::rewards

#endif  // ASMKIT_REWARDS_SUCCESS_HPP_
