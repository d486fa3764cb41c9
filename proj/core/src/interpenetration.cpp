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

#include "asmkit/geometry/interpenetration.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "asmkit/rng.hpp"

namespace asmkit::geom {

namespace {

constexpr double kPoseLattice = 1073741824.0;  // 2^30

double snap(double x) { return std::round(x * kPoseLattice) / kPoseLattice; }

double depth_at_point(const Eigen::Vector3d& p, const MeshQueries& socket,
                      const SdfGrid* grid) {
  if (grid != nullptr) {
    const SdfGrid::Sample s = grid->sample(p);
    return (!s.extrapolated && s.value < 0.0) ? -s.value : 0.0;
  }
  if (!socket.contains_point(p)) return 0.0;
  return socket.distance(p);
}

}  // namespace

Pose6D canonical_relative_pose(const Pose6D& plug_pose, const Pose6D& socket_pose) {
  const Pose6D rel = socket_pose.inverse() * plug_pose;
  Pose6D out;
  out.position = {snap(rel.position.x()), snap(rel.position.y()),
                  snap(rel.position.z())};
  Eigen::Quaterniond q(snap(rel.orientation.w()), snap(rel.orientation.x()),
                       snap(rel.orientation.y()), snap(rel.orientation.z()));
  q.normalize();
  out.orientation = q;
  return out;
}

double max_interpenetration(const PointSample& plug_points,
                            const MeshQueries& socket_queries,
                            const Pose6D& plug_pose, const Pose6D& socket_pose,
                            const InterpenetrationOptions& options) {
  const Pose6D rel = canonical_relative_pose(plug_pose, socket_pose);

  // Disjoint transformed bboxes cannot interpenetrate.
  const Eigen::AlignedBox3d socket_box = socket_queries.mesh().bbox;
  Eigen::AlignedBox3d plug_box_in_socket;
  plug_box_in_socket.setEmpty();
  for (const Eigen::Vector3d& p : plug_points.points) {
    plug_box_in_socket.extend(rel.transform_point(p));
  }
  if (!plug_box_in_socket.intersects(socket_box)) return 0.0;

  const auto& pts = plug_points.points;
  const SdfGrid* grid = options.socket_grid;

  auto scan = [&](std::size_t begin, std::size_t end) {
    double local = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const Eigen::Vector3d p = rel.transform_point(pts[i]);
      local = std::max(local, depth_at_point(p, socket_queries, grid));
    }
    return local;
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1 || pts.size() < 256) {
    return scan(0, pts.size());
  }
  std::vector<double> partial(threads, 0.0);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int w = 0; w < threads; ++w) {
    const std::size_t b = pts.size() * w / threads;
    const std::size_t e = pts.size() * (w + 1) / threads;
    pool.emplace_back([&, b, e, w] { partial[w] = scan(b, e); });
  }
  for (auto& t : pool) t.join();
  return *std::max_element(partial.begin(), partial.end());
}

double max_interpenetration(const TriangleMesh& plug, const TriangleMesh& socket,
                            const Pose6D& plug_pose, const Pose6D& socket_pose,
                            int n, std::uint64_t seed,
                            const InterpenetrationOptions& options) {
  if (n < 1) throw std::invalid_argument("sample count must be >= 1");
  if (!plug.watertight || !socket.watertight) {
    throw std::invalid_argument("interpenetration check requires watertight meshes");
  }
  const double sf = std::clamp(options.surface_fraction, 0.0, 1.0);
  const int n_surface = static_cast<int>(std::lround(n * sf));
  const int n_volume = n - n_surface;

  PointSample pts;
  pts.seed = seed;
  pts.points.reserve(n);
  MeshQueries plug_queries(plug);
  if (n_surface > 0) {
    PointSample s = sample_points(plug, n_surface, SampleMode::Surface,
                                  mix_seed({seed, 1}));
    pts.points.insert(pts.points.end(), s.points.begin(), s.points.end());
  }
  if (n_volume > 0) {
    PointSample v = sample_points(plug_queries, n_volume, SampleMode::Volume,
                                  mix_seed({seed, 2}));
    pts.points.insert(pts.points.end(), v.points.begin(), v.points.end());
  }

  MeshQueries socket_queries(socket);
  return max_interpenetration(pts, socket_queries, plug_pose, socket_pose, options);
}

}  // namespace asmkit::geom
