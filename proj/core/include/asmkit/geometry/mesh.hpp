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

#ifndef ASMKIT_GEOMETRY_MESH_HPP_
#define ASMKIT_GEOMETRY_MESH_HPP_

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace asmkit::geom {

/// Indexed triangle mesh, units in meters.
///
/// finalize() must be called after the vertex/triangle arrays are filled
/// (loaders and generators do this). It validates indices, computes the
/// bounding box, and sets the watertight flag, which is true only when
/// every undirected edge is shared by exactly two triangles.
struct TriangleMesh {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> triangles;
  Eigen::AlignedBox3d bbox;
  bool watertight = false;

  void finalize();

  bool empty() const { return triangles.empty(); }

  Eigen::Vector3d triangle_vertex(int tri, int corner) const {
    return vertices[triangles[tri][corner]];
  }
  double triangle_area(int tri) const;
  double total_area() const;
  double bbox_diagonal() const { return bbox.diagonal().norm(); }
};

enum class MeshFormat { AutoDetect, Obj, StlAscii, StlBinary };

/// Loads an OBJ (positions + faces; polygons fan-triangulated) or an
/// ASCII/binary STL (vertices welded on exact coordinate match).
/// Zero-area triangles are dropped and reported through `warnings`.
/// Throws std::runtime_error on missing files or parse failures.
TriangleMesh load_mesh(const std::filesystem::path& path,
                       MeshFormat format = MeshFormat::AutoDetect,
                       std::vector<std::string>* warnings = nullptr);

/// Writes an ASCII OBJ (positions + faces). Used by tools and tests.
void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path);

}  // namespace asmkit::geom

#endif  // ASMKIT_GEOMETRY_MESH_HPP_
