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

#ifndef ASMKIT_GEOMETRY_SDF_HPP_
#define ASMKIT_GEOMETRY_SDF_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "asmkit/geometry/mesh.hpp"

namespace asmkit::geom {

/// Dense voxel grid of signed distances (meters, negative inside).
///
/// Values live on lattice points origin + (i, j, k) * voxel_size and are
/// stored as f32, x-fastest. Queries interpolate trilinearly; lattice
/// points reproduce stored values exactly. Queries outside the grid return
/// the boundary value plus the distance to the grid and are flagged.
struct SdfGrid {
  Eigen::Vector3d origin = Eigen::Vector3d::Zero();
  double voxel_size = 0.0;
  std::array<std::uint32_t, 3> dims = {0, 0, 0};
  std::vector<float> values;

  struct Sample {
    double value = 0.0;
    bool extrapolated = false;
  };

  float at(int i, int j, int k) const {
    return values[static_cast<std::size_t>(k) * dims[0] * dims[1] +
                  static_cast<std::size_t>(j) * dims[0] +
                  static_cast<std::size_t>(i)];
  }
  float& at(int i, int j, int k) {
    return values[static_cast<std::size_t>(k) * dims[0] * dims[1] +
                  static_cast<std::size_t>(j) * dims[0] +
                  static_cast<std::size_t>(i)];
  }

  Eigen::Vector3d lattice_point(int i, int j, int k) const {
    return origin + voxel_size * Eigen::Vector3d(i, j, k);
  }

  Sample sample(const Eigen::Vector3d& p) const;
  double query(const Eigen::Vector3d& p) const { return sample(p).value; }

  Eigen::Vector3d max_corner() const {
    return origin + voxel_size * Eigen::Vector3d(dims[0] - 1, dims[1] - 1,
                                                 dims[2] - 1);
  }

  /// Binary container: magic "SDFG", version u32, origin 3xf64,
  /// voxel_size f64, dims 3xu32, then f32 values in x-fastest order.
  /// All fields little-endian.
  void save(const std::filesystem::path& path) const;
  static SdfGrid load(const std::filesystem::path& path);
};

struct BakeOptions {
  int padding_voxels = 2;
  std::size_t max_voxels = 256ull * 256ull * 256ull;
  int threads = 0;  // 0: hardware concurrency
};

/// Bakes the signed distance field of a watertight mesh: magnitude from
/// exact closest-point queries, sign from containment parity. Deterministic
/// regardless of thread count. Throws when the voxel budget is exceeded.
SdfGrid bake_sdf(const TriangleMesh& mesh, double voxel_size,
                 const BakeOptions& options = {});

/// Default grid resolution: 1/128 of the mesh bounding-box diagonal.
double default_voxel_size(const TriangleMesh& mesh);

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_SDF_HPP_
