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

#include "asmkit/geometry/sdf.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "asmkit/geometry/primitives.hpp"
#include "asmkit/rng.hpp"
#include "support/oracles.hpp"

using namespace asmkit;

namespace {
const geom::TriangleMesh& unit_sphere() {
  static const geom::TriangleMesh mesh = geom::make_icosphere(0.5, 3);
  return mesh;
}

const geom::SdfGrid& sphere_grid() {
  static const geom::SdfGrid grid = geom::bake_sdf(unit_sphere(), 0.01);
  return grid;
}
}  // namespace

TEST_CASE("sphere grid matches the analytic field at key points") {
  const geom::SdfGrid& g = sphere_grid();
  // Center of the sphere: depth ~ -0.5 (mesh chords make it slightly less).
  CHECK(g.query({0, 0, 0}) == doctest::Approx(-0.5).epsilon(0.04));
  CHECK(std::abs(g.query({0, 0, 0}) - (-0.5)) < 2 * g.voxel_size);
  // Outside along +x.
  CHECK(std::abs(g.query({0.75, 0, 0}) - 0.25) < 2 * g.voxel_size);
}

TEST_CASE("grid covers the mesh bbox with at least 2 voxels of padding") {
  const geom::SdfGrid& g = sphere_grid();
  const auto& bbox = unit_sphere().bbox;
  for (int a = 0; a < 3; ++a) {
    CHECK(g.origin[a] <= bbox.min()[a] - 2 * g.voxel_size + 1e-12);
    CHECK(g.max_corner()[a] >= bbox.max()[a] + 2 * g.voxel_size - 1e-12);
  }
}

TEST_CASE("random probes against the analytic box field") {
  const geom::TriangleMesh cube = geom::make_box({1, 1, 1});
  const geom::SdfGrid g = geom::bake_sdf(cube, 0.02);
  Rng rng(4242);
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector3d p = rng.uniform_in_box(g.origin, g.max_corner());
    const double expected = oracles::box_sdf(p, Eigen::Vector3d::Zero(), {1, 1, 1});
    CHECK(std::abs(g.query(p) - expected) < 2 * g.voxel_size);
  }
}

TEST_CASE("random probes against the analytic sphere field") {
  const geom::SdfGrid& g = sphere_grid();
  Rng rng(4243);
  double max_err = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Eigen::Vector3d p = rng.uniform_in_box(g.origin, g.max_corner());
    const double expected = oracles::sphere_sdf(p, Eigen::Vector3d::Zero(), 0.5);
    max_err = std::max(max_err, std::abs(g.query(p) - expected));
  }
  CHECK(max_err < 2 * g.voxel_size);
}

TEST_CASE("lattice points reproduce stored values exactly") {
  const geom::SdfGrid& g = sphere_grid();
  for (int k : {0, 3, 17}) {
    for (int j : {1, 9, 33}) {
      for (int i : {0, 21, 50}) {
        const auto s = g.sample(g.lattice_point(i, j, k));
        CHECK(s.value == static_cast<double>(g.at(i, j, k)));
        CHECK_FALSE(s.extrapolated);
      }
    }
  }
}

TEST_CASE("midpoint of lattice neighbors interpolates to the mean") {
  geom::SdfGrid g;
  g.origin = {0, 0, 0};
  g.voxel_size = 0.1;
  g.dims = {2, 2, 2};
  // x-neighbors at 1 and 3; the other 6 corners all equal across y/z.
  g.values = {1.0f, 3.0f, 1.0f, 3.0f, 1.0f, 3.0f, 1.0f, 3.0f};
  CHECK(g.query({0.05, 0.02, 0.07}) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("out-of-grid queries are flagged and add the gap distance") {
  const geom::SdfGrid& g = sphere_grid();
  const Eigen::Vector3d outside = g.max_corner() + Eigen::Vector3d(0.1, 0, 0);
  const auto s = g.sample(outside);
  CHECK(s.extrapolated);
  const auto edge = g.sample(g.max_corner());
  CHECK_FALSE(edge.extrapolated);
  CHECK(s.value == doctest::Approx(edge.value + 0.1).epsilon(1e-6));
}

TEST_CASE("bake rejects non-watertight meshes and tiny voxel budgets") {
  geom::TriangleMesh open;
  open.vertices = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}};
  open.triangles = {{0, 1, 2}};
  open.finalize();
  CHECK_THROWS_AS(geom::bake_sdf(open, 0.1), std::invalid_argument);

  const geom::TriangleMesh cube = geom::make_box({1, 1, 1});
  geom::BakeOptions opts;
  opts.max_voxels = 1000;  // far below what voxel_size=0.01 needs
  CHECK_THROWS_AS(geom::bake_sdf(cube, 0.01, opts), std::runtime_error);
}

TEST_CASE("baking is deterministic across thread counts") {
  const geom::TriangleMesh cube = geom::make_box({0.4, 0.4, 0.4});
  geom::BakeOptions serial;
  serial.threads = 1;
  geom::BakeOptions parallel;
  parallel.threads = 8;
  const geom::SdfGrid a = geom::bake_sdf(cube, 0.05, serial);
  const geom::SdfGrid b = geom::bake_sdf(cube, 0.05, parallel);
  CHECK(a.values == b.values);
}

TEST_CASE("sdf file round trip is bit-exact with the documented header") {
  const geom::SdfGrid& g = sphere_grid();
  const auto path = std::filesystem::temp_directory_path() / "asmkit_sphere.sdfg";
  g.save(path);

  // Header layout: magic, version, origin, voxel, dims.
  std::ifstream in(path, std::ios::binary);
  char magic[4];
  in.read(magic, 4);
  CHECK(std::string(magic, 4) == "SDFG");
  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), 4);
  CHECK(version == 1);

  const geom::SdfGrid loaded = geom::SdfGrid::load(path);
  CHECK(loaded.origin == g.origin);
  CHECK(loaded.voxel_size == g.voxel_size);
  CHECK(loaded.dims == g.dims);
  CHECK(loaded.values == g.values);

  const auto expected_bytes = 4 + 4 + 3 * 8 + 8 + 3 * 4 +
                              g.values.size() * sizeof(float);
  CHECK(std::filesystem::file_size(path) == expected_bytes);
}
