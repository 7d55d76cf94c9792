#include "glno/mesh/mesh.hpp"

#include <map>

#include "glno/util/error.hpp"

namespace glno::mesh {

double TriangleMesh::face_area(int f) const {
    const auto& tri = faces[static_cast<std::size_t>(f)];
    const Eigen::Vector3d& a = vertices[static_cast<std::size_t>(tri[0])];
    const Eigen::Vector3d& b = vertices[static_cast<std::size_t>(tri[1])];
    const Eigen::Vector3d& c = vertices[static_cast<std::size_t>(tri[2])];
    return 0.5 * (b - a).cross(c - a).norm();
}

double TriangleMesh::total_area() const {
    double area = 0.0;
    for (int f = 0; f < face_count(); ++f) area += face_area(f);
    return area;
}

double TriangleMesh::mean_edge_length() const {
    double len = 0.0;
    std::size_t cnt = 0;
    for (const auto& tri : faces) {
        for (int e = 0; e < 3; ++e) {
            len += (vertices[static_cast<std::size_t>(tri[e])] -
                    vertices[static_cast<std::size_t>(tri[(e + 1) % 3])])
                       .norm();
            ++cnt;
        }
    }
    return cnt > 0 ? len / static_cast<double>(cnt) : 0.0;
}

void TriangleMesh::validate() const {
    const int nv = vertex_count();
    for (const auto& v : vertices)
        require(v.allFinite(), "mesh: non-finite vertex position");
    for (int f = 0; f < face_count(); ++f) {
        const auto& tri = faces[static_cast<std::size_t>(f)];
        for (int e = 0; e < 3; ++e)
            require(tri[e] >= 0 && tri[e] < nv, "mesh: face ", f, " index out of range");
        require(tri[0] != tri[1] && tri[1] != tri[2] && tri[0] != tri[2],
                "mesh: face ", f, " repeats a vertex");
        require(face_area(f) > kMinFaceArea, "mesh: face ", f, " is degenerate (area ",
                face_area(f), ")");
    }
}

namespace {
std::map<std::pair<int, int>, int> edge_face_counts(const TriangleMesh& mesh) {
    std::map<std::pair<int, int>, int> counts;
    for (const auto& tri : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            int a = tri[e], b = tri[(e + 1) % 3];
            if (a > b) std::swap(a, b);
            ++counts[{a, b}];
        }
    }
    return counts;
}
} // namespace

std::vector<int> TriangleMesh::boundary_vertices() const {
    std::vector<char> on_boundary(static_cast<std::size_t>(vertex_count()), 0);
    for (const auto& [edge, cnt] : edge_face_counts(*this)) {
        if (cnt == 1) {
            on_boundary[static_cast<std::size_t>(edge.first)] = 1;
            on_boundary[static_cast<std::size_t>(edge.second)] = 1;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < vertex_count(); ++v)
        if (on_boundary[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool TriangleMesh::is_closed() const {
    for (const auto& [edge, cnt] : edge_face_counts(*this))
        if (cnt != 2) return false;
    return true;
}

} // namespace glno::mesh
