#pragma once

#include "glno/mesh/laplacian.hpp"

namespace glno::mesh {

using ScalarField = Eigen::VectorXd;

/// <f, g>_mu = sum_v f_v g_v mass_v.
double mass_inner_product(const ScalarField& f, const ScalarField& g,
                          const MassMatrix& mass);

/// Per-vertex mean-curvature magnitude |H| = ||M^{-1} S X|| / 2 applied to
/// the coordinate functions (unnormalized).
ScalarField raw_mean_curvature(const TriangleMesh& mesh);

/// raw_mean_curvature min-max normalized to [0, 1]. A constant raw field
/// (flat mesh) returns all zeros.
ScalarField curvature_field(const TriangleMesh& mesh);

/// Breadth-first graph distance to the mesh boundary scaled by mean edge
/// length, min-max normalized to [0, 1]. Closed meshes (no boundary) give
/// all zeros.
ScalarField boundary_distance_field(const TriangleMesh& mesh);

enum class GeometryFieldKind { Curvature, BoundaryDistance };

/// The geometry-encoding field P: curvature by default, falling back to
/// boundary distance when curvature is constant (flat domains), or the
/// explicitly requested kind.
ScalarField geometry_field(const TriangleMesh& mesh, GeometryFieldKind kind);
ScalarField geometry_field_auto(const TriangleMesh& mesh);

} // namespace glno::mesh
