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

#ifndef ASMKIT_GEOMETRY_BVH_HPP_
#define ASMKIT_GEOMETRY_BVH_HPP_

#include <vector>

#include "asmkit/geometry/mesh.hpp"

namespace asmkit::geom {

/// Closest point on a single triangle (a, b, c) to p.
Eigen::Vector3d closest_point_on_triangle(const Eigen::Vector3d& p,
                                          const Eigen::Vector3d& a,
                                          const Eigen::Vector3d& b,
                                          const Eigen::Vector3d& c);

struct ClosestPointResult {
  Eigen::Vector3d point;
  double distance = 0.0;
  int triangle = -1;
};

/// Read-only acceleration structure over a mesh. The mesh must outlive the
/// queries object. All queries are const and safe for concurrent use.
class MeshQueries {
 public:
  explicit MeshQueries(const TriangleMesh& mesh);

  const TriangleMesh& mesh() const { return *mesh_; }

  /// Exact closest surface point; identical distance to an exhaustive scan.
  ClosestPointResult closest_point(const Eigen::Vector3d& p) const;

  double distance(const Eigen::Vector3d& p) const {
    return closest_point(p).distance;
  }

  /// Strict interior test by ray-crossing parity. Degenerate hits (edge
  /// grazing, coplanar rays, on-surface origins) retry along a fixed
  /// deterministic direction sequence, so results are reproducible.
  /// Requires a watertight mesh.
  bool contains_point(const Eigen::Vector3d& p) const;

  /// Signed distance: negative inside, positive outside.
  double signed_distance(const Eigen::Vector3d& p) const;

 private:
  struct Node {
    Eigen::AlignedBox3d box;
    int left = -1;    // internal node when >= 0
    int right = -1;
    int first = 0;    // leaf triangle range in tri_order_
    int count = 0;
  };

  // Crossing count along origin+t*dir for t > 0, or -1 on a degenerate hit.
  int count_ray_crossings(const Eigen::Vector3d& origin,
                          const Eigen::Vector3d& dir) const;

  int build(std::vector<int>& tris, int first, int count);

  const TriangleMesh* mesh_;
  std::vector<Node> nodes_;
  std::vector<int> tri_order_;
  int root_ = -1;
};

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_BVH_HPP_
