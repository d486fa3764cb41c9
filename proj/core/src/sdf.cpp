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

#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "asmkit/geometry/bvh.hpp"

namespace asmkit::geom {

namespace {

constexpr char kMagic[4] = {'S', 'D', 'F', 'G'};
constexpr std::uint32_t kVersion = 1;

// Fractions within this of a lattice plane snap onto it, so querying a
// stored lattice point reproduces the stored value exactly even when the
// continuous index carries division round-off.
constexpr double kLatticeSnap = 1e-9;

struct AxisIndex {
  int i;
  double frac;
  bool clamped;
};

AxisIndex locate(double x, double origin, double inv_h, int dim) {
  AxisIndex out{0, 0.0, false};
  double u = (x - origin) * inv_h;
  if (u <= 0.0) {
    out.clamped = u < 0.0;
    out.i = 0;
    out.frac = 0.0;
    return out;
  }
  if (u >= dim - 1) {
    out.clamped = u > dim - 1;
    out.i = dim - 1;
    out.frac = 0.0;
    return out;
  }
  double fi = std::floor(u);
  double frac = u - fi;
  if (frac < kLatticeSnap) {
    frac = 0.0;
  } else if (frac > 1.0 - kLatticeSnap) {
    fi += 1.0;
    frac = 0.0;
  }
  out.i = static_cast<int>(fi);
  out.frac = frac;
  return out;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  // Host is little-endian on every supported platform; bytes go out as-is.
  out.write(buf, sizeof(T));
}

template <typename T>
T read_le(std::istream& in) {
  char buf[sizeof(T)];
  in.read(buf, sizeof(T));
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace

SdfGrid::Sample SdfGrid::sample(const Eigen::Vector3d& p) const {
  if (dims[0] < 2 || dims[1] < 2 || dims[2] < 2) {
    throw std::logic_error("sdf grid not initialized");
  }
  const double inv_h = 1.0 / voxel_size;
  const AxisIndex ax = locate(p.x(), origin.x(), inv_h, static_cast<int>(dims[0]));
  const AxisIndex ay = locate(p.y(), origin.y(), inv_h, static_cast<int>(dims[1]));
  const AxisIndex az = locate(p.z(), origin.z(), inv_h, static_cast<int>(dims[2]));

  const int i1 = std::min(ax.i + 1, static_cast<int>(dims[0]) - 1);
  const int j1 = std::min(ay.i + 1, static_cast<int>(dims[1]) - 1);
  const int k1 = std::min(az.i + 1, static_cast<int>(dims[2]) - 1);

  const double fx = ax.frac, fy = ay.frac, fz = az.frac;
  const double c000 = at(ax.i, ay.i, az.i), c100 = at(i1, ay.i, az.i);
  const double c010 = at(ax.i, j1, az.i), c110 = at(i1, j1, az.i);
  const double c001 = at(ax.i, ay.i, k1), c101 = at(i1, ay.i, k1);
  const double c011 = at(ax.i, j1, k1), c111 = at(i1, j1, k1);

  const double c00 = c000 + (c100 - c000) * fx;
  const double c10 = c010 + (c110 - c010) * fx;
  const double c01 = c001 + (c101 - c001) * fx;
  const double c11 = c011 + (c111 - c011) * fx;
  const double c0 = c00 + (c10 - c00) * fy;
  const double c1 = c01 + (c11 - c01) * fy;
  double value = c0 + (c1 - c0) * fz;

  Sample out;
  out.extrapolated = ax.clamped || ay.clamped || az.clamped;
  if (out.extrapolated) {
    // Clamp to the grid and add the gap; a cheap proxy for the distance
    // growth outside the stored region.
    const Eigen::Vector3d clamped =
        p.cwiseMax(origin).cwiseMin(max_corner());
    value += (p - clamped).norm();
  }
  out.value = value;
  return out;
}

void SdfGrid::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write sdf file: " + path.string());
  out.write(kMagic, 4);
  write_le<std::uint32_t>(out, kVersion);
  write_le<double>(out, origin.x());
  write_le<double>(out, origin.y());
  write_le<double>(out, origin.z());
  write_le<double>(out, voxel_size);
  write_le<std::uint32_t>(out, dims[0]);
  write_le<std::uint32_t>(out, dims[1]);
  write_le<std::uint32_t>(out, dims[2]);
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size() * sizeof(float)));
  if (!out) throw std::runtime_error("short write: " + path.string());
}

SdfGrid SdfGrid::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open sdf file: " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("not an SDFG file: " + path.string());
  }
  const auto version = read_le<std::uint32_t>(in);
  if (version != kVersion) {
    throw std::runtime_error("unsupported SDFG version " + std::to_string(version));
  }
  SdfGrid g;
  g.origin.x() = read_le<double>(in);
  g.origin.y() = read_le<double>(in);
  g.origin.z() = read_le<double>(in);
  g.voxel_size = read_le<double>(in);
  g.dims[0] = read_le<std::uint32_t>(in);
  g.dims[1] = read_le<std::uint32_t>(in);
  g.dims[2] = read_le<std::uint32_t>(in);
  const std::size_t count =
      static_cast<std::size_t>(g.dims[0]) * g.dims[1] * g.dims[2];
  g.values.resize(count);
  in.read(reinterpret_cast<char*>(g.values.data()),
          static_cast<std::streamsize>(count * sizeof(float)));
  if (!in) throw std::runtime_error("truncated SDFG file: " + path.string());
  return g;
}

double default_voxel_size(const TriangleMesh& mesh) {
  return mesh.bbox_diagonal() / 128.0;
}

SdfGrid bake_sdf(const TriangleMesh& mesh, double voxel_size,
                 const BakeOptions& options) {
  if (voxel_size <= 0.0) throw std::invalid_argument("voxel_size must be > 0");
  if (!mesh.watertight) {
    throw std::invalid_argument("bake_sdf requires a watertight mesh");
  }
  const int pad = std::max(options.padding_voxels, 2);

  SdfGrid g;
  g.voxel_size = voxel_size;
  g.origin = mesh.bbox.min() - pad * voxel_size * Eigen::Vector3d::Ones();
  for (int a = 0; a < 3; ++a) {
    const double extent = mesh.bbox.max()[a] - mesh.bbox.min()[a];
    g.dims[a] = static_cast<std::uint32_t>(std::ceil(extent / voxel_size)) +
                2 * pad + 1;
  }
  const std::size_t total =
      static_cast<std::size_t>(g.dims[0]) * g.dims[1] * g.dims[2];
  if (total > options.max_voxels) {
    throw std::runtime_error(
        "sdf grid of " + std::to_string(total) + " voxels exceeds budget of " +
        std::to_string(options.max_voxels) +
        "; increase voxel_size or raise max_voxels");
  }
  g.values.resize(total);

  const MeshQueries queries(mesh);
  const int threads = options.threads > 0
                          ? options.threads
                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int nz = static_cast<int>(g.dims[2]);

  auto bake_slab = [&](int k_begin, int k_end) {
    for (int k = k_begin; k < k_end; ++k) {
      for (int j = 0; j < static_cast<int>(g.dims[1]); ++j) {
        for (int i = 0; i < static_cast<int>(g.dims[0]); ++i) {
          const Eigen::Vector3d p = g.lattice_point(i, j, k);
          const double d = queries.distance(p);
          g.at(i, j, k) = static_cast<float>(queries.contains_point(p) ? -d : d);
        }
      }
    }
  };

  if (threads <= 1 || nz < 2) {
    bake_slab(0, nz);
  } else {
    // Disjoint k-slabs; each voxel is written once, so the result does not
    // depend on the thread count.
    std::vector<std::thread> pool;
    const int workers = std::min(threads, nz);
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int k0 = nz * w / workers;
      const int k1 = nz * (w + 1) / workers;
      pool.emplace_back(bake_slab, k0, k1);
    }
    for (auto& t : pool) t.join();
  }
  return g;
}

}  // namespace asmkit::geom
