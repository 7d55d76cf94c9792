#include "glno/mesh/laplacian.hpp"

#include <vector>

#include "glno/util/error.hpp"

namespace glno::mesh {

LaplacianPair build_laplacian(const TriangleMesh& mesh) {
    mesh.validate();
    const int nv = mesh.vertex_count();

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<std::size_t>(mesh.face_count()) * 12);
    Eigen::VectorXd mass = Eigen::VectorXd::Zero(nv);

    for (int f = 0; f < mesh.face_count(); ++f) {
        const auto& tri = mesh.faces[static_cast<std::size_t>(f)];
        const Eigen::Vector3d p[3] = {mesh.vertices[static_cast<std::size_t>(tri[0])],
                                      mesh.vertices[static_cast<std::size_t>(tri[1])],
                                      mesh.vertices[static_cast<std::size_t>(tri[2])]};
        const double area = mesh.face_area(f);
        for (int c = 0; c < 3; ++c)
            mass[tri[c]] += area / 3.0;

        // Corner c is opposite edge (c+1, c+2); its cotangent weights that edge.
        for (int c = 0; c < 3; ++c) {
            const int i = tri[(c + 1) % 3];
            const int j = tri[(c + 2) % 3];
            const Eigen::Vector3d u = p[(c + 1) % 3] - p[c];
            const Eigen::Vector3d v = p[(c + 2) % 3] - p[c];
            const double cross = u.cross(v).norm();
            require(cross > 0.0, "laplacian: zero-area corner in face ", f);
            double cot = u.dot(v) / cross;
            require(std::isfinite(cot), "laplacian: non-finite cotangent in face ", f);
            cot = std::clamp(cot, -kCotClamp, kCotClamp);
            const double w = 0.5 * cot;
            trips.emplace_back(i, j, -w);
            trips.emplace_back(j, i, -w);
            trips.emplace_back(i, i, w);
            trips.emplace_back(j, j, w);
        }
    }

    LaplacianPair out;
    out.stiffness.resize(nv, nv);
    out.stiffness.setFromTriplets(trips.begin(), trips.end());
    out.stiffness.makeCompressed();
    out.mass.diag = std::move(mass);
    for (int v = 0; v < nv; ++v)
        require(out.mass.diag[v] > 0.0, "laplacian: isolated vertex ", v,
                " has zero mass");
    return out;
}

} // namespace glno::mesh
