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

#include "asmkit/geometry/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "asmkit/rng.hpp"

namespace asmkit::geom {

namespace {

PointSample sample_surface(const TriangleMesh& mesh, int n, std::uint64_t seed) {
  std::vector<double> cumulative(mesh.triangles.size());
  double total = 0.0;
  for (std::size_t t = 0; t < mesh.triangles.size(); ++t) {
    total += mesh.triangle_area(static_cast<int>(t));
    cumulative[t] = total;
  }
  if (total <= 0.0) throw std::invalid_argument("mesh has zero surface area");

  PointSample out;
  out.mode = SampleMode::Surface;
  out.seed = seed;
  out.points.reserve(n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    const double pick = rng.uniform() * total;
    const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), pick);
    const int tri = static_cast<int>(
        std::min<std::ptrdiff_t>(it - cumulative.begin(),
                                 static_cast<std::ptrdiff_t>(cumulative.size()) - 1));
    // Uniform barycentric via the sqrt trick.
    const double r1 = std::sqrt(rng.uniform());
    const double r2 = rng.uniform();
    const double u = 1.0 - r1;
    const double v = r1 * (1.0 - r2);
    const double w = r1 * r2;
    const auto& t = mesh.triangles[tri];
    out.points.push_back(u * mesh.vertices[t[0]] + v * mesh.vertices[t[1]] +
                         w * mesh.vertices[t[2]]);
  }
  return out;
}

PointSample sample_volume(const MeshQueries& queries, int n, std::uint64_t seed) {
  const TriangleMesh& mesh = queries.mesh();
  if (!mesh.watertight) {
    throw std::invalid_argument("volume sampling requires a watertight mesh");
  }
  PointSample out;
  out.mode = SampleMode::Volume;
  out.seed = seed;
  out.points.reserve(n);
  Rng rng(seed);
  const Eigen::Vector3d lo = mesh.bbox.min();
  const Eigen::Vector3d hi = mesh.bbox.max();
  constexpr int kMaxAttemptsPerPoint = 100000;
  for (int i = 0; i < n; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < kMaxAttemptsPerPoint; ++attempt) {
      const Eigen::Vector3d p = rng.uniform_in_box(lo, hi);
      if (queries.contains_point(p)) {
        out.points.push_back(p);
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::runtime_error(
          "volume sampling failed: interior occupies a vanishing fraction of the bbox");
    }
  }
  return out;
}

}  // namespace

PointSample sample_points(const MeshQueries& queries, int n, SampleMode mode,
                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  if (mode == SampleMode::Surface) {
    return sample_surface(queries.mesh(), n, seed);
  }
  return sample_volume(queries, n, seed);
}

PointSample sample_points(const TriangleMesh& mesh, int n, SampleMode mode,
                          std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  if (mode == SampleMode::Surface) {
    return sample_surface(mesh, n, seed);
  }
  MeshQueries queries(mesh);
  return sample_volume(queries, n, seed);
}

}  // namespace asmkit::geom
