#include "glno/mesh/fields.hpp"

#include <deque>

#include "glno/util/error.hpp"

namespace glno::mesh {

double mass_inner_product(const ScalarField& f, const ScalarField& g,
                          const MassMatrix& mass) {
    require(f.size() == g.size() && f.size() == mass.diag.size(),
            "mass_inner_product: length mismatch (", f.size(), ", ", g.size(), ", ",
            mass.diag.size(), ")");
    double acc = 0.0;
    for (Eigen::Index v = 0; v < f.size(); ++v) acc += f[v] * g[v] * mass.diag[v];
    return acc;
}

namespace {
// Min-max normalize; constant fields map to all zeros.
ScalarField normalize01(const ScalarField& raw) {
    const double lo = raw.minCoeff();
    const double hi = raw.maxCoeff();
    if (hi - lo <= 1e-12 * std::max(1.0, std::abs(hi)))
        return ScalarField::Zero(raw.size());
    return (raw.array() - lo) / (hi - lo);
}
} // namespace

ScalarField curvature_field(const TriangleMesh& mesh) {
    const auto lap = build_laplacian(mesh);
    const int nv = mesh.vertex_count();
    Eigen::MatrixXd coords(nv, 3);
    for (int v = 0; v < nv; ++v) coords.row(v) = mesh.vertices[static_cast<std::size_t>(v)];
    const Eigen::MatrixXd hn =
        lap.mass.diag.cwiseInverse().asDiagonal() * (lap.stiffness * coords);
    ScalarField raw = 0.5 * hn.rowwise().norm();
    return normalize01(raw);
}

ScalarField boundary_distance_field(const TriangleMesh& mesh) {
    const int nv = mesh.vertex_count();
    const auto boundary = mesh.boundary_vertices();
    if (boundary.empty()) return ScalarField::Zero(nv);

    // Vertex adjacency from faces.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nv));
    for (const auto& tri : mesh.faces) {
        for (int e = 0; e < 3; ++e) {
            adj[static_cast<std::size_t>(tri[e])].push_back(tri[(e + 1) % 3]);
            adj[static_cast<std::size_t>(tri[(e + 1) % 3])].push_back(tri[e]);
        }
    }

    std::vector<int> hops(static_cast<std::size_t>(nv), -1);
    std::deque<int> queue;
    for (int v : boundary) {
        hops[static_cast<std::size_t>(v)] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (hops[static_cast<std::size_t>(w)] < 0) {
                hops[static_cast<std::size_t>(w)] = hops[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }

    const double scale = mesh.mean_edge_length();
    ScalarField raw(nv);
    for (int v = 0; v < nv; ++v) {
        require(hops[static_cast<std::size_t>(v)] >= 0,
                "boundary_distance: vertex ", v, " unreachable from boundary");
        raw[v] = scale * hops[static_cast<std::size_t>(v)];
    }
    return normalize01(raw);
}

ScalarField geometry_field(const TriangleMesh& mesh, GeometryFieldKind kind) {
    switch (kind) {
    case GeometryFieldKind::Curvature: return curvature_field(mesh);
    case GeometryFieldKind::BoundaryDistance: return boundary_distance_field(mesh);
    }
    fail("geometry_field: bad kind");
}

ScalarField geometry_field_auto(const TriangleMesh& mesh) {
    ScalarField p = curvature_field(mesh);
    if (p.maxCoeff() - p.minCoeff() <= 0.0) p = boundary_distance_field(mesh);
    return p;
}

} // namespace glno::mesh
