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

#include "asmkit/geometry/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace asmkit::geom {

namespace {

void add_tri(TriangleMesh& m, int a, int b, int c) {
  m.triangles.push_back({a, b, c});
}

/// Boundary point of an origin-centered rectangle (half-extents h) hit by
/// the ray at angle theta.
Eigen::Vector2d rect_boundary_point(const Eigen::Vector2d& h, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  double t = std::numeric_limits<double>::infinity();
  if (std::abs(c) > 1e-15) t = std::min(t, h.x() / std::abs(c));
  if (std::abs(s) > 1e-15) t = std::min(t, h.y() / std::abs(s));
  return {t * c, t * s};
}

std::vector<double> rect_corner_angles(const Eigen::Vector2d& h) {
  return {std::atan2(h.y(), h.x()), std::atan2(h.y(), -h.x()),
          std::atan2(-h.y(), -h.x()), std::atan2(-h.y(), h.x())};
}

}  // namespace

TriangleMesh make_box(const Eigen::Vector3d& size, const Eigen::Vector3d& center) {
  if ((size.array() <= 0.0).any()) {
    throw std::invalid_argument("box size must be positive");
  }
  TriangleMesh m;
  const Eigen::Vector3d h = 0.5 * size;
  for (int i = 0; i < 8; ++i) {
    m.vertices.emplace_back(center.x() + ((i & 1) ? h.x() : -h.x()),
                            center.y() + ((i & 2) ? h.y() : -h.y()),
                            center.z() + ((i & 4) ? h.z() : -h.z()));
  }
  // Each face as two triangles, outward winding.
  const int f[6][4] = {
      {0, 2, 3, 1},  // z-
      {4, 5, 7, 6},  // z+
      {0, 1, 5, 4},  // y-
      {2, 6, 7, 3},  // y+
      {0, 4, 6, 2},  // x-
      {1, 3, 7, 5},  // x+
  };
  for (const auto& q : f) {
    add_tri(m, q[0], q[1], q[2]);
    add_tri(m, q[0], q[2], q[3]);
  }
  m.finalize();
  return m;
}

TriangleMesh make_cylinder(double radius, double height, int segments) {
  if (radius <= 0.0 || height <= 0.0 || segments < 3) {
    throw std::invalid_argument("bad cylinder parameters");
  }
  TriangleMesh m;
  const int n = segments;
  for (int ring = 0; ring < 2; ++ring) {
    const double z = ring == 0 ? 0.0 : height;
    for (int i = 0; i < n; ++i) {
      const double a = 2.0 * M_PI * i / n;
      m.vertices.emplace_back(radius * std::cos(a), radius * std::sin(a), z);
    }
  }
  const int c_bot = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0.0, 0.0, 0.0);
  const int c_top = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0.0, 0.0, height);

  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    add_tri(m, i, n + i, j);          // side
    add_tri(m, j, n + i, n + j);
    add_tri(m, c_bot, j, i);          // bottom cap, normal -z
    add_tri(m, c_top, n + i, n + j);  // top cap, normal +z
  }
  m.finalize();
  return m;
}

TriangleMesh make_icosphere(double radius, int subdivisions,
                            const Eigen::Vector3d& center) {
  if (radius <= 0.0 || subdivisions < 0 || subdivisions > 7) {
    throw std::invalid_argument("bad icosphere parameters");
  }
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> verts = {
      {-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  std::vector<std::array<int, 3>> tris = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (auto& v : verts) v.normalize();

  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      const Eigen::Vector3d v = (verts[a] + verts[b]).normalized();
      const int idx = static_cast<int>(verts.size());
      verts.push_back(v);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    next.reserve(tris.size() * 4);
    for (const auto& t : tris) {
      const int ab = mid(t[0], t[1]);
      const int bc = mid(t[1], t[2]);
      const int ca = mid(t[2], t[0]);
      next.push_back({t[0], ab, ca});
      next.push_back({t[1], bc, ab});
      next.push_back({t[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    tris = std::move(next);
  }

  TriangleMesh m;
  m.vertices.reserve(verts.size());
  for (const auto& v : verts) m.vertices.push_back(center + radius * v);
  m.triangles = std::move(tris);
  m.finalize();
  return m;
}

TriangleMesh make_socket_plate(BoreShape shape, const Eigen::Vector2d& bore_size,
                               const Eigen::Vector2d& plate_size, double depth,
                               double wall, int segments) {
  if ((bore_size.array() <= 0.0).any() || (plate_size.array() <= 0.0).any() ||
      depth <= 0.0 || wall <= 0.0 || segments < 8) {
    throw std::invalid_argument("bad socket plate parameters");
  }
  if (bore_size.x() >= plate_size.x() || bore_size.y() >= plate_size.y()) {
    throw std::invalid_argument("bore does not fit inside plate");
  }

  const Eigen::Vector2d outer_h = 0.5 * plate_size;
  const Eigen::Vector2d bore_h = 0.5 * bore_size;

  // One shared angle set parameterizes both loops; rectangle corner angles
  // are inserted explicitly so the polygonal loops contain exact corners.
  std::vector<double> angles;
  for (int i = 0; i < segments; ++i) {
    angles.push_back(-M_PI + 2.0 * M_PI * i / segments);
  }
  for (double a : rect_corner_angles(outer_h)) angles.push_back(a);
  if (shape == BoreShape::Rect) {
    for (double a : rect_corner_angles(bore_h)) angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               angles.end());
  const int n = static_cast<int>(angles.size());

  auto inner_pt = [&](double theta) -> Eigen::Vector2d {
    if (shape == BoreShape::Round) {
      return {bore_h.x() * std::cos(theta), bore_h.x() * std::sin(theta)};
    }
    return rect_boundary_point(bore_h, theta);
  };

  TriangleMesh m;
  const double z_floor = -depth;
  const double z_bottom = -(depth + wall);
  // Vertex layout: [inner top | inner floor | outer top | outer bottom].
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d p = inner_pt(angles[i]);
    m.vertices.emplace_back(p.x(), p.y(), 0.0);
  }
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d p = inner_pt(angles[i]);
    m.vertices.emplace_back(p.x(), p.y(), z_floor);
  }
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d p = rect_boundary_point(outer_h, angles[i]);
    m.vertices.emplace_back(p.x(), p.y(), 0.0);
  }
  for (int i = 0; i < n; ++i) {
    const Eigen::Vector2d p = rect_boundary_point(outer_h, angles[i]);
    m.vertices.emplace_back(p.x(), p.y(), z_bottom);
  }
  const int floor_center = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0.0, 0.0, z_floor);
  const int bottom_center = static_cast<int>(m.vertices.size());
  m.vertices.emplace_back(0.0, 0.0, z_bottom);

  const int in_top = 0, in_floor = n, out_top = 2 * n, out_bot = 3 * n;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    // Top annulus (normal +z).
    add_tri(m, in_top + i, out_top + i, out_top + j);
    add_tri(m, in_top + i, out_top + j, in_top + j);
    // Bore wall (normal toward axis).
    add_tri(m, in_top + i, in_top + j, in_floor + i);
    add_tri(m, in_floor + i, in_top + j, in_floor + j);
    // Bore floor (normal +z).
    add_tri(m, floor_center, in_floor + i, in_floor + j);
    // Outer wall (normal away from axis).
    add_tri(m, out_top + i, out_bot + i, out_top + j);
    add_tri(m, out_top + j, out_bot + i, out_bot + j);
    // Plate bottom (normal -z).
    add_tri(m, bottom_center, out_bot + j, out_bot + i);
  }
  m.finalize();
  return m;
}

}  // namespace asmkit::geom
