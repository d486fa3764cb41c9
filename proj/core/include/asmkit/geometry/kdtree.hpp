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

#ifndef ASMKIT_GEOMETRY_KDTREE_HPP_
#define ASMKIT_GEOMETRY_KDTREE_HPP_

#include <vector>

#include <Eigen/Core>

namespace asmkit::geom {

/// Exact nearest-neighbor queries over a fixed 3D point set.
class PointKdTree {
 public:
  explicit PointKdTree(std::vector<Eigen::Vector3d> points);

  std::size_t size() const { return points_.size(); }

  /// Index of the closest stored point and its squared distance.
  std::pair<int, double> nearest(const Eigen::Vector3d& q) const;

 private:
  struct Node {
    int point = -1;
    int axis = 0;
    int left = -1;
    int right = -1;
  };

  int build(std::vector<int>& idx, int first, int count, int depth);
  void search(int node, const Eigen::Vector3d& q, int& best,
              double& best_d2) const;

  std::vector<Eigen::Vector3d> points_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_KDTREE_HPP_
