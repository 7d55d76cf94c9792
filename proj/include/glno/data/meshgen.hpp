#pragma once

#include <cstdint>

#include "glno/mesh/mesh.hpp"

namespace glno::data {

using mesh::TriangleMesh;

/// Icosahedron subdivided `subdivisions` times, projected to the given
/// radius. Vertex count is 10 * 4^s + 2.
TriangleMesh icosphere(int subdivisions, double radius = 1.0);

/// Regular triangulation of [0, lx] x [0, ly] with nx * ny vertices; each
/// quad split along the same diagonal. jitter > 0 displaces interior
/// vertices by jitter * cell (deterministic in seed).
TriangleMesh rectangle_grid(int nx, int ny, double lx = 1.0, double ly = 1.0,
                            double jitter = 0.0, std::uint64_t seed = 0);

/// Boundary-conforming Delaunay triangulation of [0,1]^2 with exactly
/// n_vertices vertices (evenly spaced boundary ring + jittered-grid
/// interior). Bowyer-Watson insertion, deterministic in seed.
TriangleMesh delaunay_rectangle(int n_vertices, std::uint64_t seed);

/// Torus with major radius R, minor radius r, nu x nv parameter grid.
TriangleMesh torus(int nu, int nv, double major_radius = 1.0, double minor_radius = 0.4);

/// Open cylinder (periodic strip): circumference 2*pi*radius, height h.
/// Intrinsically flat; used where a flat periodic geometry is needed.
TriangleMesh cylinder_strip(int nu, int nv, double radius, double height);

/// Perturbed copy: small vertex jitter plus valid random edge flips plus a
/// random rotation. Deterministic in seed.
TriangleMesh noisy_remesh(const TriangleMesh& input, std::uint64_t seed);

} // namespace glno::data
