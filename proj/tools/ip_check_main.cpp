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
#include <vector>

#include <CLI11.hpp>

#include "asmkit/geometry/interpenetration.hpp"
#include "asmkit/geometry/mesh.hpp"

namespace {

asmkit::Pose6D parse_pose(const std::vector<double>& v) {
  // x y z qw qx qy qz
  return asmkit::Pose6D({v[0], v[1], v[2]},
                        Eigen::Quaterniond(v[3], v[4], v[5], v[6]));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Maximum interpenetration depth of a posed plug mesh into a socket mesh"};
  std::string plug_path;
  std::string socket_path;
  std::vector<double> plug_pose{0, 0, 0, 1, 0, 0, 0};
  std::vector<double> socket_pose{0, 0, 0, 1, 0, 0, 0};
  int n = asmkit::geom::kDefaultInterpenetrationSamples;
  std::uint64_t seed = 0;
  double surface_fraction = 0.5;
  int threads = 1;

  app.add_option("--plug", plug_path, "Plug mesh (.obj/.stl)")->required();
  app.add_option("--socket", socket_path, "Socket mesh (.obj/.stl)")->required();
  app.add_option("--plug-pose", plug_pose,
                 "Plug pose: x y z qw qx qy qz")->expected(7);
  app.add_option("--socket-pose", socket_pose,
                 "Socket pose: x y z qw qx qy qz")->expected(7);
  app.add_option("--n", n, "Number of sampled query points");
  app.add_option("--seed", seed, "Sampling seed");
  app.add_option("--surface-fraction", surface_fraction,
                 "Fraction of points sampled on the plug surface");
  app.add_option("--threads", threads, "Worker threads");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto plug = asmkit::geom::load_mesh(plug_path);
    const auto socket = asmkit::geom::load_mesh(socket_path);
    asmkit::geom::InterpenetrationOptions opts;
    opts.surface_fraction = surface_fraction;
    opts.threads = threads;
    const double d = asmkit::geom::max_interpenetration(
        plug, socket, parse_pose(plug_pose), parse_pose(socket_pose), n, seed, opts);
    std::printf("d_ip_max_m: %.9g\n", d);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
