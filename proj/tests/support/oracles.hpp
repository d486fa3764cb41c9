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

// Independent reference implementations used as test oracles. Everything
// here is deliberately brute-force and shares no code with the library
// paths it checks.

#ifndef ASMKIT_TESTS_SUPPORT_ORACLES_HPP_
#define ASMKIT_TESTS_SUPPORT_ORACLES_HPP_

#include <vector>

#include "asmkit/curriculum/curriculum.hpp"
#include "asmkit/geometry/mesh.hpp"
#include "asmkit/pose.hpp"

namespace asmkit::oracles {

/// Signed distance to a sphere surface.
double sphere_sdf(const Eigen::Vector3d& p, const Eigen::Vector3d& center,
                  double radius);

/// Exact signed distance to an axis-aligned box centered at `center` with
/// full extents `size`.
double box_sdf(const Eigen::Vector3d& p, const Eigen::Vector3d& center,
               const Eigen::Vector3d& size);

/// Generalized winding number of the mesh surface around p (1 inside a
/// watertight mesh, 0 outside), via the solid-angle sum.
double winding_number(const geom::TriangleMesh& mesh, const Eigen::Vector3d& p);

/// Closest distance to the mesh by scanning every triangle.
double exhaustive_closest_distance(const geom::TriangleMesh& mesh,
                                   const Eigen::Vector3d& p);

/// Symmetric chamfer (mean squared NN both ways) by the O(n*m) scan.
double brute_force_chamfer(const std::vector<Eigen::Vector3d>& a,
                           const std::vector<Eigen::Vector3d>& b);

/// Analytic unit-geometry interpenetration oracle: densely samples a
/// lattice over the plug's local bounds, keeps points inside the plug
/// (analytic predicate), transforms them through the given relative pose,
/// and takes the max interior distance to the socket surface (analytic
/// SDF). Shapes are described by their analytic SDFs.
struct AnalyticShape {
  enum Kind { Sphere, Box } kind = Box;
  Eigen::Vector3d size = Eigen::Vector3d::Ones();  // box extents
  double radius = 0.5;                             // sphere

  double sdf(const Eigen::Vector3d& p) const;
  Eigen::Vector3d bounds_min() const;
  Eigen::Vector3d bounds_max() const;
};

double dense_grid_interpenetration(const AnalyticShape& plug,
                                   const AnalyticShape& socket,
                                   const Pose6D& plug_pose,
                                   const Pose6D& socket_pose, double grid_step);

/// Independent re-implementation of the curriculum lower-bound fold.
std::vector<double> curriculum_fold(const std::vector<double>& p_trace,
                                    double z_low, double z_high, double dz_inc,
                                    double dz_dec, double z_low_min,
                                    double z_low_max, double advance_threshold,
                                    double revert_threshold);

}  // namespace asmkit::oracles

#endif  // ASMKIT_TESTS_SUPPORT_ORACLES_HPP_
