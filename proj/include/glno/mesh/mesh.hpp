#pragma once

#include <Eigen/Core>

#include <array>
#include <string>
#include <vector>

namespace glno::mesh {

/// Discrete surface: 3D vertex positions plus triangle connectivity.
struct TriangleMesh {
    std::vector<Eigen::Vector3d> vertices;
    std::vector<std::array<int, 3>> faces;

    int vertex_count() const { return static_cast<int>(vertices.size()); }
    int face_count() const { return static_cast<int>(faces.size()); }

    double face_area(int f) const;
    double total_area() const;
    double mean_edge_length() const;

    /// Index checks, no repeated vertex within a face, area above threshold.
    void validate() const;

    /// Vertices on open boundary edges (edges adjacent to exactly one face).
    std::vector<int> boundary_vertices() const;

    /// True when every edge is adjacent to exactly two faces.
    bool is_closed() const;
};

inline constexpr double kMinFaceArea = 1e-12;

} // namespace glno::mesh
