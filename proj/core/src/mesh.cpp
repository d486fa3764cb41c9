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

#include "asmkit/geometry/mesh.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace asmkit::geom {

namespace {

struct VertexKey {
  std::uint64_t x, y, z;
  bool operator==(const VertexKey&) const = default;
};

struct VertexKeyHash {
  std::size_t operator()(const VertexKey& k) const {
    std::uint64_t h = k.x * 0x9E3779B97F4A7C15ull;
    h ^= k.y + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h ^= k.z + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

VertexKey key_of(const Eigen::Vector3d& v) {
  VertexKey k;
  std::memcpy(&k.x, &v.x(), 8);
  std::memcpy(&k.y, &v.y(), 8);
  std::memcpy(&k.z, &v.z(), 8);
  return k;
}

// Welds bitwise-identical vertices; STL files repeat shared corners.
class VertexWelder {
 public:
  int add(const Eigen::Vector3d& v, std::vector<Eigen::Vector3d>& out) {
    const VertexKey k = key_of(v);
    auto [it, inserted] = index_.try_emplace(k, static_cast<int>(out.size()));
    if (inserted) out.push_back(v);
    return it->second;
  }

 private:
  std::unordered_map<VertexKey, int, VertexKeyHash> index_;
};

bool push_triangle(TriangleMesh& mesh, int a, int b, int c,
                   std::vector<std::string>* warnings) {
  if (a == b || b == c || a == c) {
    if (warnings)
      warnings->push_back("dropped degenerate triangle (repeated vertex index)");
    return false;
  }
  const Eigen::Vector3d& va = mesh.vertices[a];
  const Eigen::Vector3d e1 = mesh.vertices[b] - va;
  const Eigen::Vector3d e2 = mesh.vertices[c] - va;
  if (e1.cross(e2).squaredNorm() <= 0.0) {
    if (warnings) warnings->push_back("dropped zero-area triangle");
    return false;
  }
  mesh.triangles.push_back({a, b, c});
  return true;
}

TriangleMesh load_obj(std::istream& in, std::vector<std::string>* warnings) {
  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      double x, y, z;
      if (!(ls >> x >> y >> z)) {
        throw std::runtime_error("obj parse error: bad vertex at line " +
                                 std::to_string(line_no));
      }
      mesh.vertices.emplace_back(x, y, z);
    } else if (tag == "f") {
      std::vector<int> idx;
      std::string tok;
      while (ls >> tok) {
        // Face tokens may be "v", "v/vt", "v//vn", "v/vt/vn".
        const std::size_t slash = tok.find('/');
        const std::string head = tok.substr(0, slash);
        int i = 0;
        try {
          i = std::stoi(head);
        } catch (const std::exception&) {
          throw std::runtime_error("obj parse error: bad face index at line " +
                                   std::to_string(line_no));
        }
        if (i < 0) i = static_cast<int>(mesh.vertices.size()) + i + 1;
        if (i < 1 || i > static_cast<int>(mesh.vertices.size())) {
          throw std::runtime_error("obj parse error: face index out of range at line " +
                                   std::to_string(line_no));
        }
        idx.push_back(i - 1);
      }
      if (idx.size() < 3) {
        throw std::runtime_error("obj parse error: face with <3 vertices at line " +
                                 std::to_string(line_no));
      }
      for (std::size_t k = 2; k < idx.size(); ++k) {
        push_triangle(mesh, idx[0], idx[k - 1], idx[k], warnings);
      }
    }
    // All other tags (vn, vt, o, g, s, usemtl, ...) are ignored.
  }
  return mesh;
}

TriangleMesh load_stl_ascii(std::istream& in, std::vector<std::string>* warnings) {
  TriangleMesh mesh;
  VertexWelder welder;
  std::string tok;
  std::array<int, 3> corner{};
  int got = 0;
  while (in >> tok) {
    if (tok == "vertex") {
      double x, y, z;
      if (!(in >> x >> y >> z)) {
        throw std::runtime_error("stl parse error: bad vertex");
      }
      corner[got++] = welder.add({x, y, z}, mesh.vertices);
      if (got == 3) {
        push_triangle(mesh, corner[0], corner[1], corner[2], warnings);
        got = 0;
      }
    }
  }
  if (got != 0) throw std::runtime_error("stl parse error: truncated facet");
  return mesh;
}

TriangleMesh load_stl_binary(std::istream& in, std::vector<std::string>* warnings) {
  char header[80];
  in.read(header, 80);
  std::uint32_t count = 0;
  in.read(reinterpret_cast<char*>(&count), 4);
  if (!in) throw std::runtime_error("stl parse error: truncated header");

  TriangleMesh mesh;
  VertexWelder welder;
  for (std::uint32_t t = 0; t < count; ++t) {
    float buf[12];  // normal + 3 vertices
    in.read(reinterpret_cast<char*>(buf), sizeof(buf));
    std::uint16_t attr = 0;
    in.read(reinterpret_cast<char*>(&attr), 2);
    if (!in) throw std::runtime_error("stl parse error: truncated facet data");
    std::array<int, 3> corner{};
    for (int c = 0; c < 3; ++c) {
      const Eigen::Vector3d v(buf[3 + 3 * c], buf[4 + 3 * c], buf[5 + 3 * c]);
      corner[c] = welder.add(v, mesh.vertices);
    }
    push_triangle(mesh, corner[0], corner[1], corner[2], warnings);
  }
  return mesh;
}

bool looks_like_ascii_stl(std::istream& in) {
  // "solid" prefix is not decisive (binary exporters write it too); check
  // that the file also contains the "facet" keyword within the first chunk.
  char buf[512] = {0};
  in.read(buf, sizeof(buf) - 1);
  const auto n = in.gcount();
  in.clear();
  in.seekg(0);
  std::string head(buf, static_cast<std::size_t>(n));
  return head.rfind("solid", 0) == 0 && head.find("facet") != std::string::npos;
}

}  // namespace

void TriangleMesh::finalize() {
  const int nv = static_cast<int>(vertices.size());
  for (const auto& t : triangles) {
    for (int c : t) {
      if (c < 0 || c >= nv) {
        throw std::invalid_argument("triangle index out of range");
      }
    }
  }
  bbox.setEmpty();
  for (const auto& v : vertices) bbox.extend(v);

  // Watertight: every undirected edge shared by exactly two triangles.
  std::map<std::pair<int, int>, int> edge_count;
  for (const auto& t : triangles) {
    for (int e = 0; e < 3; ++e) {
      const int a = t[e];
      const int b = t[(e + 1) % 3];
      edge_count[{std::min(a, b), std::max(a, b)}]++;
    }
  }
  watertight = !triangles.empty();
  for (const auto& [edge, count] : edge_count) {
    if (count != 2) {
      watertight = false;
      break;
    }
  }
}

double TriangleMesh::triangle_area(int tri) const {
  const Eigen::Vector3d a = triangle_vertex(tri, 0);
  const Eigen::Vector3d b = triangle_vertex(tri, 1);
  const Eigen::Vector3d c = triangle_vertex(tri, 2);
  return 0.5 * (b - a).cross(c - a).norm();
}

double TriangleMesh::total_area() const {
  double sum = 0.0;
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    sum += triangle_area(t);
  }
  return sum;
}

TriangleMesh load_mesh(const std::filesystem::path& path, MeshFormat format,
                       std::vector<std::string>* warnings) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open mesh file: " + path.string());
  }
  if (format == MeshFormat::AutoDetect) {
    std::string ext = path.extension().string();
    for (auto& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == ".obj") {
      format = MeshFormat::Obj;
    } else if (ext == ".stl") {
      format = looks_like_ascii_stl(in) ? MeshFormat::StlAscii : MeshFormat::StlBinary;
    } else {
      throw std::runtime_error("cannot detect mesh format of: " + path.string());
    }
  }

  TriangleMesh mesh;
  switch (format) {
    case MeshFormat::Obj:
      mesh = load_obj(in, warnings);
      break;
    case MeshFormat::StlAscii:
      mesh = load_stl_ascii(in, warnings);
      break;
    case MeshFormat::StlBinary:
      mesh = load_stl_binary(in, warnings);
      break;
    case MeshFormat::AutoDetect:
      break;  // unreachable
  }
  if (mesh.vertices.empty() || mesh.triangles.empty()) {
    throw std::runtime_error("mesh has no triangles: " + path.string());
  }
  mesh.finalize();
  return mesh;
}

void save_obj(const TriangleMesh& mesh, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write mesh file: " + path.string());
  out.precision(17);
  for (const auto& v : mesh.vertices) {
    out << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
  }
  for (const auto& t : mesh.triangles) {
    out << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
  }
}

}  // namespace asmkit::geom
