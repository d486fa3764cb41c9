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

#include <doctest.h>

#include "asmkit/geometry/bvh.hpp"
#include "asmkit/geometry/primitives.hpp"
#include "asmkit/geometry/sampling.hpp"
#include "asmkit/rng.hpp"
#include "support/oracles.hpp"

using namespace asmkit;

TEST_CASE("closest point on a unit cube") {
  const geom::TriangleMesh cube = geom::make_box({1, 1, 1});
  const geom::MeshQueries q(cube);

  const auto r = q.closest_point({2.0, 0.0, 0.0});
  CHECK(r.distance == doctest::Approx(1.5).epsilon(1e-12));
  CHECK((r.point - Eigen::Vector3d(0.5, 0.0, 0.0)).norm() < 1e-12);

  // A point on the surface has distance ~0.
  CHECK(q.closest_point({0.5, 0.1, -0.2}).distance < 1e-9);
}

TEST_CASE("bvh closest point matches the exhaustive scan") {
  const geom::TriangleMesh sphere = geom::make_icosphere(0.5, 2);
  const geom::MeshQueries q(sphere);
  Rng rng(77);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector3d p(rng.uniform(-1, 1), rng.uniform(-1, 1),
                            rng.uniform(-1, 1));
    const double fast = q.closest_point(p).distance;
    const double slow = oracles::exhaustive_closest_distance(sphere, p);
    CHECK(std::abs(fast - slow) < 1e-9);
  }
}

TEST_CASE("containment basics on the unit cube") {
  const geom::TriangleMesh cube = geom::make_box({1, 1, 1});
  const geom::MeshQueries q(cube);
  CHECK(q.contains_point({0, 0, 0}));
  CHECK_FALSE(q.contains_point({1, 1, 1}));
  CHECK_FALSE(q.contains_point({0.5000001, 0, 0}));
}

TEST_CASE("containment requires a watertight mesh") {
  geom::TriangleMesh open;
  open.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  open.triangles = {{0, 1, 2}};
  open.finalize();
  const geom::MeshQueries q(open);
  CHECK_THROWS_AS(q.contains_point({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("containment agrees with the winding-number oracle") {
  const geom::TriangleMesh mesh = geom::make_socket_plate(
      geom::BoreShape::Round, {0.0085, 0.0085}, {0.048, 0.048}, 0.016, 0.008, 32);
  const geom::MeshQueries q(mesh);
  Rng rng(123);
  const Eigen::Vector3d lo = mesh.bbox.min() - 0.005 * Eigen::Vector3d::Ones();
  const Eigen::Vector3d hi = mesh.bbox.max() + 0.005 * Eigen::Vector3d::Ones();
  int inside_count = 0;
  for (int i = 0; i < 10000; ++i) {
    const Eigen::Vector3d p = rng.uniform_in_box(lo, hi);
    const bool inside = q.contains_point(p);
    const bool oracle = oracles::winding_number(mesh, p) > 0.5;
    CHECK(inside == oracle);
    inside_count += inside;
  }
  CHECK(inside_count > 0);  // the probe cloud actually hits the solid
}

TEST_CASE("signed distance flips sign across the surface") {
  const geom::TriangleMesh cube = geom::make_box({1, 1, 1});
  const geom::MeshQueries q(cube);
  CHECK(q.signed_distance({0, 0, 0}) == doctest::Approx(-0.5).epsilon(1e-9));
  CHECK(q.signed_distance({0.75, 0, 0}) == doctest::Approx(0.25).epsilon(1e-9));
}
