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

#include "asmkit/geometry/bvh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "asmkit/rng.hpp"

namespace asmkit::geom {

namespace {

constexpr int kLeafSize = 4;

double squared_distance_to_box(const Eigen::AlignedBox3d& box,
                               const Eigen::Vector3d& p) {
  double d2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double lo = box.min()[i] - p[i];
    const double hi = p[i] - box.max()[i];
    const double d = std::max({lo, hi, 0.0});
    d2 += d * d;
  }
  return d2;
}

bool ray_intersects_box(const Eigen::AlignedBox3d& box, const Eigen::Vector3d& o,
                        const Eigen::Vector3d& d) {
  double tmin = 0.0;
  double tmax = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    if (std::abs(d[i]) < 1e-300) {
      if (o[i] < box.min()[i] || o[i] > box.max()[i]) return false;
      continue;
    }
    const double inv = 1.0 / d[i];
    double t1 = (box.min()[i] - o[i]) * inv;
    double t2 = (box.max()[i] - o[i]) * inv;
    if (t1 > t2) std::swap(t1, t2);
    tmin = std::max(tmin, t1);
    tmax = std::min(tmax, t2);
    if (tmin > tmax) return false;
  }
  return true;
}

enum class RayHit { Miss, Hit, Degenerate };

// Moller-Trumbore with conservative degeneracy reporting: edge-grazing
// hits, near-coplanar rays, and hits at the ray origin all request a retry
// along the next direction in the deterministic sequence.
RayHit ray_triangle(const Eigen::Vector3d& o, const Eigen::Vector3d& d,
                    const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                    const Eigen::Vector3d& c, double scale) {
  constexpr double kBaryEps = 1e-10;
  const Eigen::Vector3d e1 = b - a;
  const Eigen::Vector3d e2 = c - a;
  const Eigen::Vector3d pv = d.cross(e2);
  const double det = e1.dot(pv);
  const double det_eps = 1e-12 * e1.norm() * e2.norm();
  if (std::abs(det) <= det_eps) {
    // Parallel ray. Only a problem when the ray actually passes near the
    // triangle's plane slab; otherwise it cannot cross.
    const Eigen::Vector3d n = e1.cross(e2);
    const double nn = n.norm();
    if (nn < 1e-300) return RayHit::Miss;
    const double plane_dist = std::abs(n.dot(o - a)) / nn;
    return plane_dist < 1e-9 * scale ? RayHit::Degenerate : RayHit::Miss;
  }
  const double inv = 1.0 / det;
  const Eigen::Vector3d tv = o - a;
  const double u = tv.dot(pv) * inv;
  if (u < -kBaryEps || u > 1.0 + kBaryEps) return RayHit::Miss;
  const Eigen::Vector3d qv = tv.cross(e1);
  const double v = d.dot(qv) * inv;
  if (v < -kBaryEps || u + v > 1.0 + kBaryEps) return RayHit::Miss;
  const double t = e2.dot(qv) * inv;
  if (t < -1e-12 * scale) return RayHit::Miss;
  if (t <= 1e-12 * scale) return RayHit::Degenerate;  // origin on surface
  if (u < kBaryEps || v < kBaryEps || u + v > 1.0 - kBaryEps) {
    return RayHit::Degenerate;  // edge or vertex graze
  }
  return RayHit::Hit;
}

// Fixed direction sequence for containment retries (irrational-looking unit
// vectors from a frozen stream; index 0 is used for every first attempt).
const std::vector<Eigen::Vector3d>& probe_directions() {
  static const std::vector<Eigen::Vector3d> dirs = [] {
    std::vector<Eigen::Vector3d> out;
    Rng rng(0x5D0FBEEFCAFE1234ull);
    while (out.size() < 32) {
      Eigen::Vector3d v(rng.normal(), rng.normal(), rng.normal());
      const double n = v.norm();
      if (n > 0.1) out.push_back(v / n);
    }
    return out;
  }();
  return dirs;
}

}  // namespace

Eigen::Vector3d closest_point_on_triangle(const Eigen::Vector3d& p,
                                          const Eigen::Vector3d& a,
                                          const Eigen::Vector3d& b,
                                          const Eigen::Vector3d& c) {
  // Ericson, Real-Time Collision Detection, 5.1.5.
  const Eigen::Vector3d ab = b - a;
  const Eigen::Vector3d ac = c - a;
  const Eigen::Vector3d ap = p - a;
  const double d1 = ab.dot(ap);
  const double d2 = ac.dot(ap);
  if (d1 <= 0.0 && d2 <= 0.0) return a;

  const Eigen::Vector3d bp = p - b;
  const double d3 = ab.dot(bp);
  const double d4 = ac.dot(bp);
  if (d3 >= 0.0 && d4 <= d3) return b;

  const double vc = d1 * d4 - d3 * d2;
  if (vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0) {
    const double v = d1 / (d1 - d3);
    return a + v * ab;
  }

  const Eigen::Vector3d cp = p - c;
  const double d5 = ab.dot(cp);
  const double d6 = ac.dot(cp);
  if (d6 >= 0.0 && d5 <= d6) return c;

  const double vb = d5 * d2 - d1 * d6;
  if (vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0) {
    const double w = d2 / (d2 - d6);
    return a + w * ac;
  }

  const double va = d3 * d6 - d5 * d4;
  if (va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0) {
    const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
    return b + w * (c - b);
  }

  const double denom = 1.0 / (va + vb + vc);
  const double v = vb * denom;
  const double w = vc * denom;
  return a + ab * v + ac * w;
}

MeshQueries::MeshQueries(const TriangleMesh& mesh) : mesh_(&mesh) {
  if (mesh.empty()) throw std::invalid_argument("empty mesh");
  std::vector<int> tris(mesh.triangles.size());
  std::iota(tris.begin(), tris.end(), 0);
  nodes_.reserve(2 * tris.size());
  root_ = build(tris, 0, static_cast<int>(tris.size()));
  tri_order_ = std::move(tris);
}

int MeshQueries::build(std::vector<int>& tris, int first, int count) {
  Node node;
  node.box.setEmpty();
  Eigen::AlignedBox3d centroid_box;
  centroid_box.setEmpty();
  for (int i = first; i < first + count; ++i) {
    const auto& t = mesh_->triangles[tris[i]];
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (int c = 0; c < 3; ++c) {
      node.box.extend(mesh_->vertices[t[c]]);
      centroid += mesh_->vertices[t[c]];
    }
    centroid_box.extend(centroid / 3.0);
  }

  const int index = static_cast<int>(nodes_.size());
  nodes_.push_back(node);
  if (count <= kLeafSize) {
    nodes_[index].first = first;
    nodes_[index].count = count;
    return index;
  }

  int axis = 0;
  centroid_box.diagonal().maxCoeff(&axis);
  const int mid = first + count / 2;
  std::nth_element(tris.begin() + first, tris.begin() + mid,
                   tris.begin() + first + count, [&](int ta, int tb) {
                     const auto& a = mesh_->triangles[ta];
                     const auto& b = mesh_->triangles[tb];
                     double ca = 0.0, cb = 0.0;
                     for (int c = 0; c < 3; ++c) {
                       ca += mesh_->vertices[a[c]][axis];
                       cb += mesh_->vertices[b[c]][axis];
                     }
                     if (ca != cb) return ca < cb;
                     return ta < tb;  // deterministic tie-break
                   });
  const int left = build(tris, first, mid - first);
  const int right = build(tris, mid, first + count - mid);
  nodes_[index].left = left;
  nodes_[index].right = right;
  return index;
}

ClosestPointResult MeshQueries::closest_point(const Eigen::Vector3d& p) const {
  ClosestPointResult best;
  best.distance = std::numeric_limits<double>::infinity();
  double best_d2 = std::numeric_limits<double>::infinity();

  int stack[128];
  int top = 0;
  stack[top++] = root_;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (squared_distance_to_box(node.box, p) > best_d2) continue;
    if (node.left < 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const int tri = tri_order_[i];
        const auto& t = mesh_->triangles[tri];
        const Eigen::Vector3d q = closest_point_on_triangle(
            p, mesh_->vertices[t[0]], mesh_->vertices[t[1]], mesh_->vertices[t[2]]);
        const double d2 = (q - p).squaredNorm();
        if (d2 < best_d2) {
          best_d2 = d2;
          best.point = q;
          best.triangle = tri;
        }
      }
      continue;
    }
    // Visit the nearer child first for tighter pruning.
    const double dl = squared_distance_to_box(nodes_[node.left].box, p);
    const double dr = squared_distance_to_box(nodes_[node.right].box, p);
    if (dl < dr) {
      stack[top++] = node.right;
      stack[top++] = node.left;
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  best.distance = std::sqrt(best_d2);
  return best;
}

int MeshQueries::count_ray_crossings(const Eigen::Vector3d& origin,
                                     const Eigen::Vector3d& dir) const {
  const double scale = std::max(mesh_->bbox_diagonal(), 1e-12);
  int crossings = 0;
  int stack[128];
  int top = 0;
  stack[top++] = root_;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (!ray_intersects_box(node.box, origin, dir)) continue;
    if (node.left < 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        const auto& t = mesh_->triangles[tri_order_[i]];
        const RayHit hit =
            ray_triangle(origin, dir, mesh_->vertices[t[0]], mesh_->vertices[t[1]],
                         mesh_->vertices[t[2]], scale);
        if (hit == RayHit::Degenerate) return -1;
        if (hit == RayHit::Hit) ++crossings;
      }
      continue;
    }
    stack[top++] = node.left;
    stack[top++] = node.right;
  }
  return crossings;
}

bool MeshQueries::contains_point(const Eigen::Vector3d& p) const {
  if (!mesh_->watertight) {
    throw std::invalid_argument("contains_point requires a watertight mesh");
  }
  if (!mesh_->bbox.contains(p)) return false;
  for (const Eigen::Vector3d& dir : probe_directions()) {
    const int crossings = count_ray_crossings(p, dir);
    if (crossings >= 0) return (crossings % 2) == 1;
  }
  // Every probe grazed a feature: the point sits on the surface itself,
  // which is not strictly inside.
  return false;
}

double MeshQueries::signed_distance(const Eigen::Vector3d& p) const {
  const double d = distance(p);
  return contains_point(p) ? -d : d;
}

}  // namespace asmkit::geom
