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

#ifndef ASMKIT_GEOMETRY_INTERPENETRATION_HPP_
#define ASMKIT_GEOMETRY_INTERPENETRATION_HPP_

#include <cstdint>

#include "asmkit/geometry/bvh.hpp"
#include "asmkit/geometry/sampling.hpp"
#include "asmkit/geometry/sdf.hpp"
#include "asmkit/pose.hpp"

namespace asmkit::geom {

struct InterpenetrationOptions {
  /// Fraction of query points drawn on the plug surface; the rest are
  /// volume samples. Both shallow and deep penetrations stay observable.
  double surface_fraction = 0.5;
  /// When set, containment and depth against the socket come from this
  /// grid (trilinear, agrees with the exact path within 2 * voxel_size)
  /// instead of exact mesh queries.
  const SdfGrid* socket_grid = nullptr;
  int threads = 1;
};

constexpr int kDefaultInterpenetrationSamples = 1000;

/// Maximum depth by which sampled plug points lie inside the socket.
///
/// Points are sampled deterministically in the plug-local frame, moved
/// through the plug->socket relative pose, and tested against the socket;
/// the deepest contained point wins, 0 when nothing is contained. The
/// relative pose is canonicalized to a sub-nanometer lattice so that a
/// rigid transform applied jointly to both poses cannot change the result
/// even at the last bit.
double max_interpenetration(const TriangleMesh& plug, const TriangleMesh& socket,
                            const Pose6D& plug_pose, const Pose6D& socket_pose,
                            int n = kDefaultInterpenetrationSamples,
                            std::uint64_t seed = 0,
                            const InterpenetrationOptions& options = {});

/// Variant reusing prebuilt structures; `plug_points` must be in the
/// plug-local frame.
double max_interpenetration(const PointSample& plug_points,
                            const MeshQueries& socket_queries,
                            const Pose6D& plug_pose, const Pose6D& socket_pose,
                            const InterpenetrationOptions& options = {});

/// Canonical plug->socket relative pose used by the checks above:
/// socket_pose^-1 * plug_pose with components snapped to a 2^-30 lattice
/// (<= 1 nm translation error) and the quaternion renormalized.
Pose6D canonical_relative_pose(const Pose6D& plug_pose, const Pose6D& socket_pose);

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_INTERPENETRATION_HPP_
