#pragma once

#include <Eigen/SparseCore>

#include "glno/mesh/mesh.hpp"

namespace glno::mesh {

/// Diagonal (barycentric lumped) mass matrix: one third of incident face
/// areas per vertex. Plays the role of the volume element in all inner
/// products.
struct MassMatrix {
    Eigen::VectorXd diag;

    double total() const { return diag.sum(); }
};

struct LaplacianPair {
    Eigen::SparseMatrix<double> stiffness; // symmetric PSD cotangent matrix
    MassMatrix mass;
};

/// Cotangents are clamped to |cot| <= cot(1 degree) before assembly to guard
/// near-degenerate triangles.
inline const double kCotClamp = 1.0 / std::tan(M_PI / 180.0);

/// Cotangent stiffness + lumped mass. Off-diagonal entries are
/// -(cot a + cot b)/2 over the faces adjacent to each edge; diagonals make
/// row sums zero. Assembled symmetrically.
LaplacianPair build_laplacian(const TriangleMesh& mesh);

} // namespace glno::mesh
