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

// Evaluates one dense reward on a scenario file and emits a JSON record.
//
// Scenario schema (paths relative to the scenario file):
//   {
//     "reward": "sdf" | "collinear_keypoints" | "sixdof_keypoints" | "chamfer",
//     "plug_mesh": "plug.obj",
//     "socket_mesh": "socket.obj",          // chamfer only
//     "current_pose": [x,y,z,qw,qx,qy,qz],
//     "goal_pose":    [x,y,z,qw,qx,qy,qz],
//     "sdf": {"points": 1000, "seed": 0, "floor_m": 1e-4, "voxel_m": 0.0},
//     "per_point_breakdown": false
//   }

#include <cstdio>
#include <fstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asmkit/geometry/mesh.hpp"
#include "asmkit/geometry/sampling.hpp"
#include "asmkit/geometry/sdf.hpp"
#include "asmkit/rewards/rewards.hpp"

using nlohmann::json;
using namespace asmkit;

namespace {

Pose6D parse_pose(const json& j, const char* key) {
  if (!j.contains(key)) return Pose6D::identity();
  const auto& v = j.at(key);
  if (!v.is_array() || v.size() != 7) {
    throw std::runtime_error(std::string("scenario field ") + key +
                             " must be [x,y,z,qw,qx,qy,qz]");
  }
  return Pose6D(Eigen::Vector3d(v[0].get<double>(), v[1].get<double>(),
                                v[2].get<double>()),
                Eigen::Quaterniond(v[3].get<double>(), v[4].get<double>(),
                                   v[5].get<double>(), v[6].get<double>()));
}

std::vector<Eigen::Vector3d> posed_vertices(const geom::TriangleMesh& mesh,
                                            const Pose6D& pose) {
  std::vector<Eigen::Vector3d> out;
  out.reserve(mesh.vertices.size());
  for (const auto& v : mesh.vertices) out.push_back(pose.transform_point(v));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evaluate a dense reward on a scenario JSON"};
  std::string scenario_path;
  std::string out_path;
  app.add_option("--scenario", scenario_path, "Scenario JSON")->required();
  app.add_option("--out", out_path, "Output JSON (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    std::ifstream in(scenario_path);
    if (!in) throw std::runtime_error("cannot open scenario: " + scenario_path);
    json scenario;
    in >> scenario;

    const auto base_dir = std::filesystem::path(scenario_path).parent_path();
    const std::string kind = scenario.at("reward").get<std::string>();
    const Pose6D current = parse_pose(scenario, "current_pose");
    const Pose6D goal = parse_pose(scenario, "goal_pose");
    const auto plug = geom::load_mesh(
        base_dir / scenario.at("plug_mesh").get<std::string>());
    const bool breakdown = scenario.value("per_point_breakdown", false);

    json out;
    if (kind == "collinear_keypoints" || kind == "sixdof_keypoints") {
      const auto kp = kind == "collinear_keypoints"
                          ? rewards::KeypointSet::collinear4(plug.bbox)
                          : rewards::KeypointSet::sixdof13(plug.bbox);
      out["reward"] = rewards::keypoint_reward(kp, current, goal);
      if (breakdown) {
        json per = json::array();
        for (const auto& k : kp.offsets) {
          per.push_back(
              (current.transform_point(k) - goal.transform_point(k)).squaredNorm());
        }
        out["per_point_breakdown"] = per;
      }
    } else if (kind == "chamfer") {
      const auto socket = geom::load_mesh(
          base_dir / scenario.at("socket_mesh").get<std::string>());
      out["reward"] = rewards::chamfer_reward(posed_vertices(plug, current),
                                              posed_vertices(socket, goal));
    } else if (kind == "sdf") {
      const json sdf_cfg = scenario.value("sdf", json::object());
      const int n = sdf_cfg.value("points", 1000);
      const std::uint64_t seed = sdf_cfg.value("seed", 0);
      const double floor = sdf_cfg.value("floor_m", rewards::kDefaultSdfRewardFloor);
      double voxel = sdf_cfg.value("voxel_m", 0.0);
      if (voxel <= 0.0) voxel = geom::default_voxel_size(plug);
      const auto grid = geom::bake_sdf(plug, voxel);
      const auto points =
          geom::sample_points(plug, n, geom::SampleMode::Surface, seed);
      out["reward"] = rewards::sdf_reward(points, current, grid, goal, floor);
      out["mean_sdf_magnitude_m"] =
          rewards::mean_sdf_magnitude(points, current, grid, goal);
      if (breakdown) {
        const Pose6D rel = goal.inverse() * current;
        json per = json::array();
        for (const auto& x : points.points) {
          per.push_back(std::abs(grid.query(rel.transform_point(x))));
        }
        out["per_point_breakdown"] = per;
      }
    } else {
      throw std::runtime_error("unknown reward kind: " + kind);
    }

    if (out_path.empty()) {
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      std::ofstream(out_path) << out.dump(2) << '\n';
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
