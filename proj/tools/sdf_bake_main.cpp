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

#include <CLI11.hpp>

#include "asmkit/geometry/mesh.hpp"
#include "asmkit/geometry/sdf.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Bake a mesh into a dense signed-distance voxel grid (.sdfg)"};
  std::string mesh_path;
  std::string out_path;
  double voxel = 0.0;
  int padding = 2;
  std::size_t max_voxels = 256ull * 256ull * 256ull;
  int threads = 0;

  app.add_option("--mesh", mesh_path, "Input mesh (.obj or .stl)")->required();
  app.add_option("--voxel", voxel,
                 "Voxel size in meters (default: bbox diagonal / 128)");
  app.add_option("--out", out_path, "Output .sdfg path")->required();
  app.add_option("--padding", padding, "Padding voxels per face (min 2)");
  app.add_option("--max-voxels", max_voxels, "Voxel budget");
  app.add_option("--threads", threads, "Worker threads (0: all cores)");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<std::string> warnings;
    const auto mesh =
        asmkit::geom::load_mesh(mesh_path, asmkit::geom::MeshFormat::AutoDetect,
                                &warnings);
    for (const auto& w : warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    if (voxel <= 0.0) voxel = asmkit::geom::default_voxel_size(mesh);

    asmkit::geom::BakeOptions opts;
    opts.padding_voxels = padding;
    opts.max_voxels = max_voxels;
    opts.threads = threads;
    const auto grid = asmkit::geom::bake_sdf(mesh, voxel, opts);
    grid.save(out_path);
    std::printf("baked %ux%ux%u grid (voxel %.6g m) -> %s\n", grid.dims[0],
                grid.dims[1], grid.dims[2], grid.voxel_size, out_path.c_str());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
