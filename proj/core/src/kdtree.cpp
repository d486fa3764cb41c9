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

#include "asmkit/geometry/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace asmkit::geom {

PointKdTree::PointKdTree(std::vector<Eigen::Vector3d> points)
    : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("empty point set");
  std::vector<int> idx(points_.size());
  std::iota(idx.begin(), idx.end(), 0);
  nodes_.reserve(points_.size());
  root_ = build(idx, 0, static_cast<int>(idx.size()), 0);
}

int PointKdTree::build(std::vector<int>& idx, int first, int count, int depth) {
  if (count <= 0) return -1;
  const int axis = depth % 3;
  const int mid = first + count / 2;
  std::nth_element(idx.begin() + first, idx.begin() + mid,
                   idx.begin() + first + count, [&](int a, int b) {
                     if (points_[a][axis] != points_[b][axis]) {
                       return points_[a][axis] < points_[b][axis];
                     }
                     return a < b;
                   });
  Node node;
  node.point = idx[mid];
  node.axis = axis;
  const int self = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  const int left = build(idx, first, mid - first, depth + 1);
  const int right = build(idx, mid + 1, first + count - mid - 1, depth + 1);
  nodes_[self].left = left;
  nodes_[self].right = right;
  return self;
}

void PointKdTree::search(int node_idx, const Eigen::Vector3d& q, int& best,
                         double& best_d2) const {
  if (node_idx < 0) return;
  const Node& node = nodes_[node_idx];
  const Eigen::Vector3d& p = points_[node.point];
  const double d2 = (p - q).squaredNorm();
  if (d2 < best_d2) {
    best_d2 = d2;
    best = node.point;
  }
  const double delta = q[node.axis] - p[node.axis];
  const int near = delta < 0.0 ? node.left : node.right;
  const int far = delta < 0.0 ? node.right : node.left;
  search(near, q, best, best_d2);
  if (delta * delta < best_d2) {
    search(far, q, best, best_d2);
  }
}

std::pair<int, double> PointKdTree::nearest(const Eigen::Vector3d& q) const {
  int best = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  search(root_, q, best, best_d2);
  return {best, best_d2};
}

}  // namespace asmkit::geom
