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

#ifndef ASMKIT_GEOMETRY_SAMPLING_HPP_
#define ASMKIT_GEOMETRY_SAMPLING_HPP_

#include <cstdint>
#include <vector>

#include "asmkit/geometry/bvh.hpp"
#include "asmkit/geometry/mesh.hpp"

namespace asmkit::geom {

enum class SampleMode { Surface, Volume };

/// Deterministic point set in mesh-local coordinates. Identical
/// (mesh, n, mode, seed) always produce identical points.
struct PointSample {
  std::vector<Eigen::Vector3d> points;
  SampleMode mode = SampleMode::Surface;
  std::uint64_t seed = 0;
};

/// Surface mode: triangles chosen area-weighted, then uniform barycentric.
/// Volume mode: rejection sampling of the bounding box against the interior
/// (requires a watertight mesh; throws std::invalid_argument otherwise).
PointSample sample_points(const TriangleMesh& mesh, int n, SampleMode mode,
                          std::uint64_t seed);

/// Same, reusing an existing acceleration structure for volume containment.
PointSample sample_points(const MeshQueries& queries, int n, SampleMode mode,
                          std::uint64_t seed);

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_SAMPLING_HPP_
