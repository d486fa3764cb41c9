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

#ifndef ASMKIT_GEOMETRY_PRIMITIVES_HPP_
#define ASMKIT_GEOMETRY_PRIMITIVES_HPP_

#include "asmkit/geometry/mesh.hpp"

namespace asmkit::geom {

/// Axis-aligned box centered at `center` with full extents `size`.
TriangleMesh make_box(const Eigen::Vector3d& size,
                      const Eigen::Vector3d& center = Eigen::Vector3d::Zero());

/// Closed cylinder along +Z with base center at the origin.
TriangleMesh make_cylinder(double radius, double height, int segments = 64);

/// Icosphere (subdivided icosahedron) with all vertices at `radius`.
TriangleMesh make_icosphere(double radius, int subdivisions = 3,
                            const Eigen::Vector3d& center = Eigen::Vector3d::Zero());

/// Cross-section of a socket bore: circular or rectangular.
enum class BoreShape { Round, Rect };

/// Rectangular plate with a blind bore sunk from its top face.
///
/// The top face of the plate sits at z = 0 (the bore opening plane); the
/// bore floor is at z = -depth, and the plate bottom at z = -(depth + wall).
/// `bore_size` is the bore diameter for Round, the (x, y) widths for Rect.
/// `plate_size` is the outer (x, y) extent of the plate.
TriangleMesh make_socket_plate(BoreShape shape, const Eigen::Vector2d& bore_size,
                               const Eigen::Vector2d& plate_size, double depth,
                               double wall, int segments = 64);

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_PRIMITIVES_HPP_
