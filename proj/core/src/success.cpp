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

#include <stdexcept>
#include <string>

namespace asmkit::rewards {

namespace {
double require(const std::optional<double>& field, const char* name) {
  if (!field.has_value()) {
    throw std::invalid_argument(std::string("check_success: missing field ") + name);
  }
  return *field;
}
}  // namespace

void SuccessCriteria::validate() const {
  if (eps_k <= 0.0 || eps_h <= 0.0) {
    throw std::invalid_argument("success thresholds must be strictly positive");
  }
}

SuccessResult check_success(const SuccessState& state,
                            const SuccessCriteria& criteria) {
  criteria.validate();
  SuccessResult out;
  switch (criteria.task) {
    case Task::Pick: {
      const double h_obj = require(state.object_height, "object_height");
      const double h_table = require(state.table_height, "table_height");
      const double extent = require(state.object_extent, "object_extent");
      // Lift above the table by twice the object's own height.
      out.success = h_obj > h_table + 2.0 * extent;
      return out;
    }
    case Task::Place: {
      const double kd = require(state.keypoint_distance, "keypoint_distance");
      out.success = kd < criteria.eps_k;
      return out;
    }
    case Task::Insert:
    case Task::Gear: {
      const double dh = require(state.delta_h, "delta_h");
      const double kd = require(state.keypoint_distance, "keypoint_distance");
      out.success = dh < criteria.eps_h && kd < criteria.eps_k;
      const double tip = require(state.plug_tip_height, "plug_tip_height");
      const double opening =
          require(state.socket_opening_height, "socket_opening_height");
      const double lateral = require(state.lateral_distance, "lateral_distance");
      out.engaged = tip < opening && lateral < criteria.eps_k;
      return out;
    }
  }
  throw std::logic_error("unknown task");
}

}  // namespace asmkit::rewards
